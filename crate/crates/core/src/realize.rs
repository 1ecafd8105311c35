//! Explicit embeddings with a prescribed socle tableau or LR-tableau.
//!
//! A socle tableau `(σ^(0) ⊃ … ⊃ σ^(s))` is realized by a chain of
//! epimorphisms `N_{σ^(0)} → N_{σ^(1)} → … → N_{σ^(s)}` with semisimple
//! kernels; `A` is the kernel of the composite.

use crate::convert::duallr_to_socle;
use crate::dvrmod::{FpModule, Subspace};
use crate::embedding::Embedding;
use crate::error::{ConvertError, RealizeError, TableauError};
use crate::fp::Matrix;
use crate::partition::Partition;
use crate::tableau::{build_matching, check_lr, check_socle, to_chain, SkewTableau, TableauKind};

/// `C^(0) → C^(1) → … → C^(s)`; `maps[ℓ−1]` is `f_ℓ : C^(ℓ−1) → C^(ℓ)`.
#[derive(Clone, Debug)]
pub struct EpiChain {
    pub stages: Vec<FpModule>,
    pub maps: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainViolation {
    NotSurjective(usize),
    NotModuleMap(usize),
    KernelNotSemisimple(usize),
    ConditionStar(usize),
    KernelLength {
        step: usize,
        expected: usize,
        got: usize,
    },
    QuotientType {
        step: usize,
        expected: Partition,
        got: Partition,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainReport {
    pub violations: Vec<ChainViolation>,
}

impl ChainReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Offsets of the blocks of `N_λ`, one per column (zero-length columns allowed).
fn offsets(lambda: &Partition, ncols: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(ncols + 1);
    let mut acc = 0;
    for c in 1..=ncols {
        out.push(acc);
        acc += lambda.col(c);
    }
    out.push(acc);
    out
}

/// Column-wise canonical surjection `N_from → N_to`, `p^i ↦ p^i` for `i < to_j`.
fn canonical_surjection(p: u32, from: &Partition, to: &Partition, ncols: usize) -> Matrix {
    let (of, ot) = (offsets(from, ncols), offsets(to, ncols));
    let mut g = Matrix::zeros(p, to.weight(), from.weight());
    for c in 1..=ncols {
        for i in 0..to.col(c) {
            g.set(ot[c - 1] + i, of[c - 1] + i, 1);
        }
    }
    g
}

/// Automorphism of `C^(ℓ)` pairing columns `(i, j)` matched across columns at level `ℓ`.
fn correction(p: u32, sigma: &SkewTableau, lambda: &Partition, l: usize) -> Result<Matrix, RealizeError> {
    let ncols = sigma.shape().beta.len();
    let off = offsets(lambda, ncols);
    let mut h = Matrix::identity(p, lambda.weight());
    let matching = build_matching(sigma, l)?;
    let mut paired = vec![false; ncols + 1];
    for &(upper, lower) in &matching.pairs {
        if upper.col == lower.col {
            continue;
        }
        let (i, j) = (lower.col, upper.col);
        if paired[i] || paired[j] {
            return Err(RealizeError::Internal(format!("column overlap at level {l}")));
        }
        paired[i] = true;
        paired[j] = true;
        let (u, v) = (lambda.col(i), lambda.col(j));
        if u < v {
            return Err(RealizeError::Internal(format!(
                "columns {i}, {j} at level {l} have lengths {u} < {v}"
            )));
        }
        // x ↦ x + incl(y), incl(p^k) = p^{u−v+k}
        for k in 0..v {
            h.set(off[i - 1] + u - v + k, off[j - 1] + k, 1);
        }
    }
    Ok(h)
}

fn chain_of(sigma: &SkewTableau, p: u32, corrected: bool) -> Result<EpiChain, RealizeError> {
    if !check_socle(sigma) {
        return Err(TableauError::Invalid("socle").into());
    }
    let chain = to_chain(sigma, TableauKind::Socle)?.chain;
    let s = chain.len() - 1;
    let ncols = sigma.shape().beta.len();
    let stages = chain
        .iter()
        .map(|lambda| FpModule::standard(p, lambda))
        .collect::<Result<Vec<_>, _>>()?;
    let mut maps = Vec::with_capacity(s);
    for l in 1..=s {
        let g = canonical_surjection(p, &chain[l - 1], &chain[l], ncols);
        let f = if corrected && l < s {
            correction(p, sigma, &chain[l], l)?.mul(&g)
        } else {
            g
        };
        maps.push(f);
    }
    Ok(EpiChain { stages, maps })
}

/// The epimorphism chain for a socle tableau.
pub fn build_chain(sigma: &SkewTableau, p: u32) -> Result<EpiChain, RealizeError> {
    let chain = chain_of(sigma, p, true)?;
    if let Some(l) = condition_star_failure(&chain) {
        return Err(RealizeError::ConditionStarViolated(l));
    }
    Ok(chain)
}

/// The same chain with every correction `h^(ℓ)` replaced by the identity.
pub fn build_chain_uncorrected(sigma: &SkewTableau, p: u32) -> Result<EpiChain, RealizeError> {
    chain_of(sigma, p, false)
}

fn kernel_in(m: &Matrix, p: u32) -> Subspace {
    if m.ncols() == 0 {
        return Subspace::zero(p, 0);
    }
    Subspace::kernel(m)
}

/// `soc Ker(f_{ℓ+1} f_ℓ) = Ker f_ℓ`.
fn condition_star_holds(c: &EpiChain, l: usize) -> bool {
    let stage = &c.stages[l - 1];
    let f = &c.maps[l - 1];
    let ff = c.maps[l].mul(f);
    let soc = kernel_in(&ff, stage.prime()).intersect(&Subspace::kernel(stage.operator()));
    soc == kernel_in(f, stage.prime())
}

fn condition_star_failure(c: &EpiChain) -> Option<usize> {
    (1..c.maps.len()).find(|&l| !condition_star_holds(c, l))
}

impl EpiChain {
    pub fn prime(&self) -> u32 {
        self.stages[0].prime()
    }

    /// `f_s ∘ … ∘ f_1`.
    pub fn composite(&self) -> Matrix {
        let n = self.stages[0].dim();
        self.maps
            .iter()
            .fold(Matrix::identity(self.prime(), n), |acc, f| f.mul(&acc))
    }

    /// `(Ker(f_s ∘ … ∘ f_1) ⊂ C^(0))`.
    pub fn embedding(&self) -> Result<Embedding, RealizeError> {
        let b = self.stages[0].clone();
        let a = kernel_in(&self.composite(), self.prime());
        Ok(Embedding::new(b, a)?)
    }
}

/// Checks the hypotheses and conclusions of the epimorphism-chain lemma.
pub fn verify_epi_chain(c: &EpiChain) -> ChainReport {
    let mut violations = Vec::new();
    let p = c.prime();
    for (k, f) in c.maps.iter().enumerate() {
        let l = k + 1;
        let (src, tgt) = (&c.stages[k], &c.stages[l]);
        if f.mul(src.operator()) != tgt.operator().mul(f) {
            violations.push(ChainViolation::NotModuleMap(l));
        }
        if f.rank() != tgt.dim() {
            violations.push(ChainViolation::NotSurjective(l));
        }
        if !kernel_in(f, p).map(src.operator()).basis().is_zero() {
            violations.push(ChainViolation::KernelNotSemisimple(l));
        }
    }
    for l in 1..c.maps.len() {
        if !condition_star_holds(c, l) {
            violations.push(ChainViolation::ConditionStar(l));
        }
    }
    if let Ok(x) = c.embedding() {
        let b = x.ambient();
        let alpha = x.alpha();
        for (k, f) in c.maps.iter().enumerate() {
            let l = k + 1;
            let got = kernel_in(f, p).dim();
            if got != alpha.row(l) {
                violations.push(ChainViolation::KernelLength {
                    step: l,
                    expected: alpha.row(l),
                    got,
                });
            }
        }
        for (l, stage) in c.stages.iter().enumerate() {
            let got = b
                .quotient_type(&b.soc_layer(x.sub(), l))
                .expect("layers are submodules");
            let expected = stage.module_type();
            if got != expected {
                violations.push(ChainViolation::QuotientType { step: l, expected, got });
            }
        }
    }
    ChainReport { violations }
}

/// An embedding whose socle tableau is `sigma`, inside `N_β`.
pub fn realize_socle(sigma: &SkewTableau, p: u32) -> Result<Embedding, RealizeError> {
    build_chain(sigma, p)?.embedding()
}

/// An embedding whose LR-tableau is `gamma`: realize the socle tableau that
/// corresponds to `gamma` as a dual LR-tableau, then dualize.
pub fn realize_lr(gamma: &SkewTableau, p: u32) -> Result<Embedding, RealizeError> {
    if !check_lr(gamma) {
        return Err(TableauError::Invalid("LR").into());
    }
    let sigma = duallr_to_socle(gamma).map_err(|e| match e {
        ConvertError::Tableau(t) => RealizeError::Tableau(t),
        other => RealizeError::Internal(other.to_string()),
    })?;
    Ok(realize_socle(&sigma, p)?.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::fixtures::m2;
    use crate::partition::shapes_up_to;
    use crate::tableau::enumerate;
    use crate::tableau::fixtures as tf;

    #[test]
    fn picket_column_needs_no_correction() {
        let sigma = tf::picket_socle();
        let c = build_chain(&sigma, 2).unwrap();
        let types: Vec<String> = c.stages.iter().map(|m| m.module_type().to_string()).collect();
        assert_eq!(types, ["5", "4", "3", "2", "1"]);
        let plain = build_chain_uncorrected(&sigma, 2).unwrap();
        assert_eq!(c.maps, plain.maps);
        let x = realize_socle(&sigma, 2).unwrap();
        let q = Embedding::picket(2, 4, 5).unwrap();
        assert_eq!(x.socle_tableau(), q.socle_tableau());
        assert_eq!(x.lr_tableau(), q.lr_tableau());
        assert_eq!(x.dual_socle_tableau(), q.dual_socle_tableau());
        assert_eq!(x.dual_lr_tableau(), q.dual_lr_tableau());
    }

    #[test]
    fn sigma2_chain() {
        let sigma = tf::sigma2();
        let c = build_chain(&sigma, 3).unwrap();
        assert!(verify_epi_chain(&c).is_clean());
        // level 2 pairs columns 1 and 2: P^3 ⊕ P^2 with x ↦ x + p y
        let h = correction(3, &sigma, &"321".parse().unwrap(), 2).unwrap();
        assert_eq!(h.get(1, 3), 1);
        assert_eq!(h.get(2, 4), 1);
        let x = realize_socle(&sigma, 3).unwrap();
        assert_eq!(x.socle_tableau(), sigma);
        assert_eq!(x.shape().to_string(), "(4,2)/(5,3,2)/(3,1)");
    }

    #[test]
    fn uncorrected_chain_violates_condition_star() {
        let c = build_chain_uncorrected(&tf::sigma2(), 2).unwrap();
        let report = verify_epi_chain(&c);
        assert!(report.violations.contains(&ChainViolation::ConditionStar(1)));
        assert!(report.violations.contains(&ChainViolation::ConditionStar(2)));
    }

    #[test]
    fn empty_tableau() {
        let beta: Partition = "32".parse().unwrap();
        let sigma = SkewTableau::empty(beta.clone());
        let c = build_chain(&sigma, 2).unwrap();
        assert!(c.maps.is_empty());
        assert!(verify_epi_chain(&c).is_clean());
        let x = realize_socle(&sigma, 2).unwrap();
        assert_eq!(x.sub().dim(), 0);
        assert_eq!(x.beta(), beta);
        let y = realize_lr(&SkewTableau::empty(beta), 2).unwrap();
        assert_eq!(y.sub().dim(), 0);
    }

    #[test]
    fn lr_realization() {
        let gamma = tf::gamma2_dual();
        let y = realize_lr(&gamma, 2).unwrap();
        assert_eq!(y.lr_tableau(), gamma);
        assert_eq!(y.dual_socle_tableau(), tf::sigma2());
        let q = realize_lr(&tf::picket_lr(), 3).unwrap();
        assert_eq!(q.socle_tableau(), tf::picket_socle());
        assert_eq!(m2(2).dual().lr_tableau(), gamma);
    }

    #[test]
    fn invalid_input_is_rejected() {
        assert!(realize_socle(&tf::gamma2_dual(), 2).is_err());
        assert!(realize_lr(&tf::sigma2(), 2).is_err());
    }

    #[test]
    fn round_trip_for_small_shapes() {
        for shape in shapes_up_to(7) {
            for sigma in enumerate(&shape, TableauKind::Socle) {
                let c = build_chain(&sigma, 2).unwrap();
                assert!(verify_epi_chain(&c).is_clean(), "{sigma}");
                let x = c.embedding().unwrap();
                assert_eq!(x.socle_tableau(), sigma);
                assert_eq!(x.sub().dim(), shape.alpha.weight());
            }
            for gamma in enumerate(&shape, TableauKind::Lr) {
                assert_eq!(realize_lr(&gamma, 3).unwrap().lr_tableau(), gamma);
            }
        }
    }
}
