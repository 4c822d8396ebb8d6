//! Chains of affine lines in `Hilb_d(A^n)(F)` from a point to a fixed basepoint.
//!
//! A point is a surjection `F[x_1, ..., x_n] -> A`, recorded by the images of
//! the variables. Two kinds of homotopy are used: moving one image linearly
//! while the others still generate, and the Rees degeneration.

use serde::Serialize;

use super::HilbError;
use crate::corealg::{BaseRing, ExactLinalg, Field, Matrix, UniPoly};
use crate::finalg::{rees_family_with_completion, specialize_family, Algebra, FamilyOverLine, ReesFamily};

/// A surjection `F[x_1, ..., x_n] -> A`, `x_i ↦ images[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SurjectionData<F> {
    pub algebra: Algebra<F>,
    pub images: Vec<Vec<F>>,
}

/// Indices of a maximal independent subset of `vecs`, greedily from the front.
fn independent<F: Field + ExactLinalg>(d: usize, vecs: &[Vec<F>]) -> Vec<usize> {
    if vecs.is_empty() {
        return Vec::new();
    }
    Matrix::from_cols(d, vecs).rref().pivots
}

fn in_span<F: Field + ExactLinalg>(d: usize, span: &[Vec<F>], v: &[F]) -> bool {
    let mut all = span.to_vec();
    all.push(v.to_vec());
    independent(d, &all).len() == independent(d, span).len()
}

impl<F: Field + ExactLinalg> SurjectionData<F> {
    pub fn new(algebra: Algebra<F>, images: Vec<Vec<F>>) -> Result<Self, HilbError> {
        if !algebra.base().is_field() {
            return Err(HilbError::Precondition(format!("{} is not a field", algebra.base())));
        }
        algebra.check_axioms().into_result()?;
        if algebra.rank() == 0 {
            return Err(HilbError::Precondition("target algebra has rank 0".into()));
        }
        let d = algebra.rank();
        if images.iter().any(|v| v.len() != d) {
            return Err(HilbError::Precondition(format!("every image needs {d} coordinates")));
        }
        let base = algebra.base().clone();
        let images = images
            .into_iter()
            .map(|v| v.into_iter().map(|c| c.resolve_in(&base)).collect())
            .collect();
        Ok(SurjectionData { algebra, images })
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Dimension of the subalgebra generated by `gens`.
    fn generated_dim(&self, gens: &[&Vec<F>]) -> usize {
        let d = self.rank();
        let mut span = vec![self.algebra.unit().to_vec()];
        for _ in 0..d {
            let mut cand = span.clone();
            for s in &span {
                for g in gens {
                    cand.push(self.algebra.mul(s, g));
                }
            }
            let keep = independent(d, &cand);
            if keep.len() == span.len() {
                break;
            }
            span = keep.into_iter().map(|i| cand[i].clone()).collect();
        }
        span.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.generated_dim(&self.images.iter().collect::<Vec<_>>()) == self.rank()
    }

    /// Whether the images other than `skip` already generate.
    pub fn is_surjective_without(&self, skip: &[usize]) -> bool {
        let gens: Vec<_> = (0..self.n())
            .filter(|i| !skip.contains(i))
            .map(|i| &self.images[i])
            .collect();
        self.generated_dim(&gens) == self.rank()
    }

    /// `1` and the first `d - 1` images form a basis and the rest vanish.
    pub fn is_straight(&self) -> bool {
        let d = self.rank();
        if self.n() + 1 < d {
            return false;
        }
        let mut v = vec![self.algebra.unit().to_vec()];
        v.extend(self.images[..d - 1].iter().cloned());
        independent(d, &v).len() == d && self.images[d - 1..].iter().all(|x| x.iter().all(|c| c.is_zero()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    /// `x_i ↦ t a + (1 - t) π(x_i)`.
    Replace,
    /// `x_j ↦ (1 - t) π(x_j)` for all moved `j`.
    Vanish,
}

/// A linear homotopy `ρ(x_j) = t·end_j + (1 - t)·start_j` on the moved indices.
#[derive(Clone, Debug, PartialEq)]
pub struct HomotopyStep<F> {
    pub kind: StepKind,
    pub moved: Vec<usize>,
    pub start: Vec<Vec<F>>,
    pub end: Vec<Vec<F>>,
}

impl<F: Field + ExactLinalg> HomotopyStep<F> {
    /// Images over `F[t]`.
    pub fn family_images(&self) -> Vec<Vec<UniPoly<F>>> {
        self.start
            .iter()
            .zip(&self.end)
            .map(|(s, e)| {
                s.iter()
                    .zip(e)
                    .map(|(s, e)| UniPoly::new(vec![s.clone(), e.clone() - s.clone()]))
                    .collect()
            })
            .collect()
    }

    pub fn images_at(&self, t0: &F) -> Vec<Vec<F>> {
        self.family_images()
            .iter()
            .map(|v| v.iter().map(|p| p.eval(t0)).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Straightening<F> {
    pub steps: Vec<HomotopyStep<F>>,
    pub result: SurjectionData<F>,
}

/// Moves the images until `1, π(x_1), ..., π(x_{d-1})` is a basis and
/// `π(x_j) = 0` for `j ≥ d`. Each step keeps the unmoved images generating,
/// which makes every fiber of the step surjective.
pub fn straighten_coordinates<F: Field + ExactLinalg>(s: &SurjectionData<F>) -> Result<Straightening<F>, HilbError> {
    let d = s.rank();
    let n = s.n();
    if n + 1 < d {
        return Err(HilbError::Precondition(format!("need n >= d - 1, got n = {n}, d = {d}")));
    }
    if !s.is_surjective() {
        return Err(HilbError::NotSurjective);
    }
    let mut cur = s.clone();
    let mut steps = Vec::new();
    for i in 0..d - 1 {
        let mut span = vec![cur.algebra.unit().to_vec()];
        span.extend(cur.images[..i].iter().cloned());
        if !in_span(d, &span, &cur.images[i]) {
            continue;
        }
        if !cur.is_surjective_without(&[i]) {
            return Err(HilbError::Algebra(crate::finalg::AlgebraError::Internal(
                "dependent image is needed to generate".into(),
            )));
        }
        let a = (0..d)
            .map(|k| cur.algebra.basis_vector(k))
            .find(|e| !in_span(d, &span, e))
            .expect("span has dimension < d");
        steps.push(HomotopyStep {
            kind: StepKind::Replace,
            moved: vec![i],
            start: vec![cur.images[i].clone()],
            end: vec![a.clone()],
        });
        cur.images[i] = a;
    }
    let moved: Vec<usize> = (d - 1..n).filter(|&j| cur.images[j].iter().any(|c| !c.is_zero())).collect();
    if !moved.is_empty() {
        let zero = cur.algebra.zero_vec();
        steps.push(HomotopyStep {
            kind: StepKind::Vanish,
            start: moved.iter().map(|&j| cur.images[j].clone()).collect(),
            end: vec![zero.clone(); moved.len()],
            moved: moved.clone(),
        });
        for &j in &moved {
            cur.images[j] = zero.clone();
        }
    }
    Ok(Straightening { steps, result: cur })
}

/// Checks a step: the unmoved images of `before` generate, and both ends are surjective.
pub fn certify_step<F: Field + ExactLinalg>(before: &SurjectionData<F>, step: &HomotopyStep<F>) -> bool {
    let mut after = before.clone();
    for (k, &j) in step.moved.iter().enumerate() {
        if before.images[j] != step.start[k] {
            return false;
        }
        after.images[j] = step.end[k].clone();
    }
    before.is_surjective_without(&step.moved) && before.is_surjective() && after.is_surjective()
}

/// The Rees family of `A` over `F[t]` with marked elements `X̃_i = t·π(x_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReesPath<F> {
    pub rees: ReesFamily<F>,
    pub marked: Vec<Vec<UniPoly<F>>>,
}

impl<F: Field + ExactLinalg> ReesPath<F> {
    pub fn family(&self) -> &FamilyOverLine<F> {
        &self.rees.family
    }

    pub fn fiber(&self, t0: &F) -> Result<SurjectionData<F>, HilbError> {
        let algebra = specialize_family(&self.rees.family, t0)?;
        let t0 = t0.resolve_in(algebra.base());
        let images = self
            .marked
            .iter()
            .map(|v| v.iter().map(|p| p.eval(&t0)).collect())
            .collect();
        SurjectionData::new(algebra, images)
    }

    pub fn basepoint(&self) -> Result<SurjectionData<F>, HilbError> {
        self.fiber(&F::zero())
    }
}

/// Requires straightened input; see [`straighten_coordinates`].
pub fn rees_path_to_basepoint<F: Field + ExactLinalg>(s: &SurjectionData<F>) -> Result<ReesPath<F>, HilbError> {
    let d = s.rank();
    if !s.is_straight() {
        return Err(HilbError::SpanningFailure(format!(
            "1 and the first {} images must be a basis and the remaining images zero",
            d - 1
        )));
    }
    let completion = &s.images[..d - 1];
    let rees = rees_family_with_completion(&s.algebra, completion)?;
    let p = &rees.base_change;
    let marked = s
        .images
        .iter()
        .map(|v| {
            let y = F::solve(p, v).expect("base change is invertible");
            y.into_iter()
                .enumerate()
                .map(|(k, c)| if k == 0 { UniPoly::monomial(c, 1) } else { UniPoly::constant(c) })
                .collect()
        })
        .collect();
    Ok(ReesPath { rees, marked })
}

/// `F ⊕ F^{d-1}` with square-zero maximal ideal, `x_i ↦ e_i` for `i < d` and `x_j ↦ 0` after.
pub fn canonical_basepoint<F: Field + ExactLinalg>(d: usize, n: usize, base: BaseRing) -> Result<SurjectionData<F>, HilbError> {
    if d == 0 || n + 1 < d {
        return Err(HilbError::Precondition(format!("need n >= d - 1 >= 0, got n = {n}, d = {d}")));
    }
    let algebra = Algebra::<F>::square_zero_extension(d - 1, base);
    let images = (0..n)
        .map(|i| if i + 1 < d { algebra.basis_vector(i + 1) } else { algebra.zero_vec() })
        .collect();
    SurjectionData::new(algebra, images)
}

/// Straightening steps followed by the Rees path.
#[derive(Clone, Debug, PartialEq)]
pub struct BasepointPath<F> {
    pub straightening: Straightening<F>,
    pub rees: ReesPath<F>,
}

pub fn path_to_basepoint<F: Field + ExactLinalg>(s: &SurjectionData<F>) -> Result<BasepointPath<F>, HilbError> {
    let straightening = straighten_coordinates(s)?;
    let rees = rees_path_to_basepoint(&straightening.result)?;
    Ok(BasepointPath { straightening, rees })
}

impl<F: Field + ExactLinalg> BasepointPath<F> {
    /// Every step certified, both ends of the Rees path surjective, and the
    /// `t = 0` end equal to the canonical basepoint.
    pub fn verify(&self, start: &SurjectionData<F>) -> Result<(), HilbError> {
        let mut cur = start.clone();
        for step in &self.straightening.steps {
            if !certify_step(&cur, step) {
                return Err(HilbError::NotSurjective);
            }
            for (k, &j) in step.moved.iter().enumerate() {
                cur.images[j] = step.end[k].clone();
            }
        }
        if cur != self.straightening.result {
            return Err(HilbError::Precondition("steps do not compose to the result".into()));
        }
        let one = self.rees.fiber(&F::one())?;
        if !one.is_surjective() {
            return Err(HilbError::NotSurjective);
        }
        // at t = 1 the marked elements are the straightened images in the Rees basis
        let p = &self.rees.rees.base_change;
        for (m, v) in one.images.iter().zip(&cur.images) {
            if &p.mul_vec(m) != v {
                return Err(HilbError::Precondition("t = 1 fiber does not recover the input".into()));
            }
        }
        let bp = self.rees.basepoint()?;
        let canon = canonical_basepoint(cur.rank(), cur.n(), cur.algebra.base().clone())?;
        if bp != canon {
            return Err(HilbError::Precondition("t = 0 fiber is not the canonical basepoint".into()));
        }
        Ok(())
    }
}
