//! Conversions between the socle tableau, the LR-tableau of the dual
//! embedding, and the Hom-matrix `h_ℓ^m = len Hom(P_ℓ^m, X)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dvrmod::Subspace;
use crate::embedding::Embedding;
use crate::error::{ConvertError, ModuleError, TableauError};
use crate::fp::Matrix;
use crate::partition::{Cell, Partition, ShapeTriple};
use crate::tableau::{check, check_lr, check_socle, from_chain, to_chain, PartitionChain, SkewTableau, TableauKind};

/// Hom-dimensions from pickets, `h[ℓ][m]` for `0 ≤ ℓ ≤ L`, `ℓ ≤ m ≤ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMatrix {
    l: usize,
    m: usize,
    h: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct HomMatrixJson {
    #[serde(rename = "L")]
    l: usize,
    #[serde(rename = "M")]
    m: usize,
    h: Vec<Vec<Option<usize>>>,
}

impl HomMatrix {
    /// Fills every in-range entry from `f(ℓ, m)`.
    pub fn from_fn(l: usize, m: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let h = (0..=l)
            .map(|i| (0..=m).map(|j| if i <= j { f(i, j) } else { 0 }).collect())
            .collect();
        HomMatrix { l, m, h }
    }

    /// Bounds `(L, M)` for a shape with `α₁ = a1`, `β₁ = b1`.
    pub fn bounds(a1: usize, b1: usize) -> (usize, usize) {
        (a1 + 1, a1 + b1 + 1)
    }

    pub fn l_bound(&self) -> usize {
        self.l
    }

    pub fn m_bound(&self) -> usize {
        self.m
    }

    /// Stored entry; `None` outside `0 ≤ ℓ ≤ L`, `ℓ ≤ m ≤ M`.
    pub fn stored(&self, l: usize, m: usize) -> Option<usize> {
        (l <= self.l && m <= self.m && l <= m).then(|| self.h[l][m])
    }

    /// `h_ℓ^m` for arbitrary indices: zero for negative indices, and the
    /// stabilized values `h_ℓ^{ℓ+k} = h_L^{L+k}` for `ℓ > L` and
    /// `h_ℓ^m = h_ℓ^M` for `m > M`.
    pub fn get(&self, l: i64, m: i64) -> usize {
        if l < 0 || m < 0 || l > m {
            return 0;
        }
        let (mut l, mut m) = (l as usize, m as usize);
        if l > self.l {
            m = self.l + (m - l);
            l = self.l;
        }
        self.h[l][m.min(self.m)]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let h = (0..=self.l)
            .map(|i| (0..=self.m).map(|j| self.stored(i, j)).collect())
            .collect();
        serde_json::to_value(HomMatrixJson {
            l: self.l,
            m: self.m,
            h,
        })
        .expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, ConvertError> {
        let raw: HomMatrixJson =
            serde_json::from_str(text).map_err(|e| ConvertError::InconsistentMatrix(e.to_string()))?;
        if raw.h.len() != raw.l + 1 || raw.h.iter().any(|row| row.len() != raw.m + 1) {
            return Err(ConvertError::InconsistentMatrix(format!(
                "expected {}x{} entries",
                raw.l + 1,
                raw.m + 1
            )));
        }
        let mut h = vec![vec![0; raw.m + 1]; raw.l + 1];
        for (i, row) in raw.h.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                match (i <= j, v) {
                    (true, Some(x)) => h[i][j] = *x,
                    (false, None) => {}
                    (true, None) => return Err(ConvertError::InconsistentMatrix(format!("missing entry h[{i}][{j}]"))),
                    (false, Some(_)) => {
                        return Err(ConvertError::InconsistentMatrix(format!(
                            "entry h[{i}][{j}] below the diagonal must be null"
                        )))
                    }
                }
            }
        }
        Ok(HomMatrix { l: raw.l, m: raw.m, h })
    }

    pub fn render_text(&self) -> String {
        let width = self.h.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        let mut out = format!("{:>3} |", "l\\m");
        for j in 0..=self.m {
            out.push_str(&format!(" {:>width$}", j));
        }
        out.push('\n');
        for i in 0..=self.l {
            out.push_str(&format!("{:>3} |", i));
            for j in 0..=self.m {
                match self.stored(i, j) {
                    Some(v) => out.push_str(&format!(" {:>width$}", v)),
                    None => out.push_str(&format!(" {:>width$}", ".")),
                }
            }
            out.push('\n');
        }
        out
    }
}

fn invalid(kind: TableauKind) -> ConvertError {
    ConvertError::Tableau(TableauError::Invalid(kind.name()))
}

fn inconsistent(msg: impl Into<String>) -> ConvertError {
    ConvertError::InconsistentMatrix(msg.into())
}

/// Row lengths `λ'_1, …, λ'_n` (zero beyond the partition).
fn rows_of(lambda: &Partition, n: usize) -> Vec<usize> {
    (0..=n).map(|r| if r == 0 { 0 } else { lambda.row(r) }).collect()
}

/// Partition chain of a tableau, extended by its last member.
fn chain_at(chain: &[Partition], i: usize) -> &Partition {
    &chain[i.min(chain.len() - 1)]
}

/// Rebuilds a tableau of the given kind from `mu[entry][row]` (indices from 1).
pub fn tableau_from_multiplicities(
    kind: TableauKind,
    beta: &Partition,
    mu: &[Vec<usize>],
) -> Result<SkewTableau, ConvertError> {
    let nrows = beta.first();
    let s = mu.len().saturating_sub(1);
    let mut gamma_rows = Vec::with_capacity(nrows);
    for r in 1..=nrows {
        let used: usize = (1..=s).map(|e| mu[e].get(r).copied().unwrap_or(0)).sum();
        if used > beta.row(r) {
            return Err(inconsistent(format!(
                "row {r} holds {used} entries but has length {}",
                beta.row(r)
            )));
        }
        gamma_rows.push(beta.row(r) - used);
    }
    for (e, row) in mu.iter().enumerate().skip(1) {
        if row.iter().skip(nrows + 1).any(|&x| x > 0) {
            return Err(inconsistent(format!("entry {e} placed below the last row")));
        }
    }
    let gamma = Partition::from_row_lengths(gamma_rows).map_err(|e| inconsistent(e.to_string()))?;
    let content: Vec<usize> = (1..=s).map(|e| mu[e].iter().sum()).collect();
    let alpha = Partition::from_row_lengths(content).map_err(|e| inconsistent(e.to_string()))?;
    let shape = ShapeTriple::new(alpha, beta.clone(), gamma.clone()).map_err(|e| inconsistent(e.to_string()))?;
    let mut map = BTreeMap::new();
    for r in 1..=nrows {
        let mut row_entries: Vec<usize> = Vec::new();
        for (e, m) in mu.iter().enumerate().take(s + 1).skip(1) {
            row_entries.extend(std::iter::repeat_n(e, m.get(r).copied().unwrap_or(0)));
        }
        if kind == TableauKind::Socle {
            row_entries.reverse();
        }
        for (k, e) in row_entries.into_iter().enumerate() {
            map.insert(Cell::new(r, gamma.row(r) + k + 1), e);
        }
    }
    let t = SkewTableau::from_map(shape, &map).map_err(|e| inconsistent(e.to_string()))?;
    if !check(&t, kind) {
        return Err(inconsistent(format!(
            "reconstructed {} tableau fails validation",
            kind.name()
        )));
    }
    Ok(t)
}

/// `h_ℓ^m = α'_1 + … + α'_ℓ + (σ^(ℓ))'_1 + … + (σ^(ℓ))'_{m−ℓ}`.
pub fn socle_to_hom(sigma: &SkewTableau) -> Result<HomMatrix, ConvertError> {
    if !check_socle(sigma) {
        return Err(invalid(TableauKind::Socle));
    }
    let shape = sigma.shape();
    let chain = to_chain(sigma, TableauKind::Socle)?.chain;
    let (l_max, m_max) = HomMatrix::bounds(shape.alpha.first(), shape.beta.first());
    let alpha_rows = rows_of(&shape.alpha, l_max);
    Ok(HomMatrix::from_fn(l_max, m_max, |l, m| {
        let sub: usize = alpha_rows[1..=l].iter().sum();
        let sig = chain_at(&chain, l);
        sub + (1..=m - l).map(|j| sig.row(j)).sum::<usize>()
    }))
}

fn beta_from_hom(h: &HomMatrix) -> Result<Partition, ConvertError> {
    let rows: Vec<usize> = (1..=h.m_bound())
        .map(|m| {
            let (a, b) = (h.get(0, m as i64), h.get(0, m as i64 - 1));
            a.checked_sub(b)
                .ok_or_else(|| inconsistent(format!("h[0][{m}] < h[0][{}]", m - 1)))
        })
        .collect::<Result<_, _>>()?;
    Partition::from_row_lengths(rows).map_err(|e| inconsistent(e.to_string()))
}

fn nonneg(v: i64, what: impl FnOnce() -> String) -> Result<usize, ConvertError> {
    usize::try_from(v).map_err(|_| inconsistent(format!("{} is negative ({v})", what())))
}

/// `μ_Σ(ℓ, r) = h_ℓ^{m−1} − h_ℓ^m − h_{ℓ−1}^{m−2} + h_{ℓ−1}^{m−1}` with `m = ℓ + r`.
pub fn socle_multiplicity_from_hom(h: &HomMatrix, l: usize, r: usize) -> i64 {
    let g = |a: usize, b: i64| h.get(a as i64, b) as i64;
    let m = (l + r) as i64;
    g(l, m - 1) - g(l, m) - g(l - 1, m - 2) + g(l - 1, m - 1)
}

/// `μ_{Γ*}(ℓ, m)` from the Hom-matrix, with `r = m − ℓ`.
pub fn duallr_multiplicity_from_hom(h: &HomMatrix, l: usize, m: usize) -> i64 {
    let g = |a: i64, b: i64| h.get(a, b) as i64;
    let (l, m) = (l as i64, m as i64);
    let r = m - l;
    match l.cmp(&m) {
        std::cmp::Ordering::Greater => 0,
        std::cmp::Ordering::Equal => g(0, m) - g(1, m),
        std::cmp::Ordering::Less => g(r, m) - g(r + 1, m) - g(r - 1, m - 1) + g(r, m - 1),
    }
}

pub fn hom_to_socle(h: &HomMatrix) -> Result<SkewTableau, ConvertError> {
    let beta = beta_from_hom(h)?;
    // |soc^ℓ A| = h_ℓ^ℓ
    let mut s = 0;
    for l in 1..=h.l_bound() {
        if h.get(l as i64, l as i64) > h.get(l as i64 - 1, l as i64 - 1) {
            s = l;
        }
    }
    let mut mu = vec![vec![0; beta.first() + 1]; s + 1];
    for (l, row) in mu.iter_mut().enumerate().skip(1) {
        for (r, slot) in row.iter_mut().enumerate().skip(1) {
            *slot = nonneg(socle_multiplicity_from_hom(h, l, r), || format!("mu({l},{r})"))?;
        }
    }
    let t = tableau_from_multiplicities(TableauKind::Socle, &beta, &mu)?;
    if socle_to_hom(&t)? != *h {
        return Err(inconsistent("matrix is not the Hom-matrix of its socle tableau"));
    }
    Ok(t)
}

/// `h_r^m = (λ^(m−r))'_1 + … + (λ^(m−r))'_m` for `Γ* = (λ^(ℓ))`.
pub fn duallr_to_hom(gamma_dual: &SkewTableau) -> Result<HomMatrix, ConvertError> {
    if !check_lr(gamma_dual) {
        return Err(invalid(TableauKind::Lr));
    }
    let shape = gamma_dual.shape();
    let chain = to_chain(gamma_dual, TableauKind::Lr)?.chain;
    // the embedding itself has α = shape.gamma
    let (l_max, m_max) = HomMatrix::bounds(shape.gamma.first(), shape.beta.first());
    Ok(HomMatrix::from_fn(l_max, m_max, |r, m| {
        let lam = chain_at(&chain, m - r);
        (1..=m).map(|j| lam.row(j)).sum()
    }))
}

pub fn hom_to_duallr(h: &HomMatrix) -> Result<SkewTableau, ConvertError> {
    let beta = beta_from_hom(h)?;
    let nrows = beta.first();
    let mut mu: Vec<Vec<usize>> = vec![vec![0; nrows + 1]];
    for l in 1..=nrows {
        let row = (0..=nrows)
            .map(|m| {
                if m == 0 {
                    Ok(0)
                } else {
                    nonneg(duallr_multiplicity_from_hom(h, l, m), || format!("mu*({l},{m})"))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        mu.push(row);
    }
    while mu.len() > 1 && mu.last().unwrap().iter().all(|&x| x == 0) {
        mu.pop();
    }
    let t = tableau_from_multiplicities(TableauKind::Lr, &beta, &mu)?;
    if duallr_to_hom(&t)? != *h {
        return Err(inconsistent("matrix is not the Hom-matrix of its dual LR-tableau"));
    }
    Ok(t)
}

/// `(λ^(ℓ))'_m = β'_m` for `m ≤ ℓ` and `Σ_{j>ℓ} μ_Σ(m−ℓ, j)` otherwise.
pub fn socle_to_duallr(sigma: &SkewTableau) -> Result<SkewTableau, ConvertError> {
    if !check_socle(sigma) {
        return Err(invalid(TableauKind::Socle));
    }
    let shape = sigma.shape();
    let mu = sigma.multiplicities();
    let nrows = shape.beta.first();
    let s = shape.gamma.first();
    let mu_at = |e: usize, j: usize| mu.get(e).and_then(|r| r.get(j)).copied().unwrap_or(0);
    let chain = (0..=s)
        .map(|l| {
            let rows: Vec<usize> = (1..=nrows)
                .map(|m| {
                    if m <= l {
                        shape.beta.row(m)
                    } else {
                        (l + 1..=nrows).map(|j| mu_at(m - l, j)).sum()
                    }
                })
                .collect();
            Partition::from_row_lengths(rows).map_err(|e| inconsistent(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let t = from_chain(&PartitionChain {
        kind: TableauKind::Lr,
        chain,
    })?;
    Ok(t)
}

/// `μ_Σ(ℓ, r) = (λ^(r−1))'_{m−1} − (λ^(r))'_m` with `m = ℓ + r`.
pub fn duallr_to_socle(gamma_dual: &SkewTableau) -> Result<SkewTableau, ConvertError> {
    if !check_lr(gamma_dual) {
        return Err(invalid(TableauKind::Lr));
    }
    let shape = gamma_dual.shape();
    let chain = to_chain(gamma_dual, TableauKind::Lr)?.chain;
    let nrows = shape.beta.first();
    let s = shape.gamma.first();
    let mut mu = vec![vec![0; nrows + 1]; s + 1];
    for (l, row) in mu.iter_mut().enumerate().skip(1) {
        for (r, slot) in row.iter_mut().enumerate().skip(1) {
            let m = l + r;
            let v = chain_at(&chain, r - 1).row(m - 1) as i64 - chain_at(&chain, r).row(m) as i64;
            *slot = nonneg(v, || format!("mu({l},{r})"))?;
        }
    }
    tableau_from_multiplicities(TableauKind::Socle, &shape.beta, &mu)
}

/// `len Cok Hom(f_ℓ^m, X)` for the monomorphism
/// `f_ℓ^m : P_ℓ^{m−1} → P_ℓ^m ⊕ P_{ℓ−1}^{m−2}`, `1 ↦ (p, −1)`.
///
/// At `m = ℓ` there is no row `0` and the defect is zero.
pub fn defect(x: &Embedding, l: usize, m: usize) -> Result<usize, ModuleError> {
    if l == 0 || l > m {
        return Err(ModuleError::BadIndex(format!(
            "defect needs 1 <= l <= m, got l={l}, m={m}"
        )));
    }
    if l == m {
        return Ok(0);
    }
    let p = x.prime();
    let f = picket_sequence_map(p, l, m)?;
    let b = x.ambient();
    // Hom(P_a^c, X) is identified with {y ∈ B : p^c y = 0, p^{c−a} y ∈ A} via 1 ↦ y.
    let hom_src = x.picket_hom_space(l, m - 1);
    let hom_first = x.picket_hom_space(l, m);
    let hom_second = if m >= 2 {
        x.picket_hom_space(l - 1, m - 2)
    } else {
        b.zero_submodule()
    };
    // (y, z) ↦ (y, z) ∘ f; the image of the generator of P^{m−1} is
    // Σ_i f_i p^i y + Σ_i g_i p^i z, read off the first column of f.
    let induced = |space: &Subspace, offset: usize, len: usize| -> Subspace {
        let mut op = Matrix::zeros(p, b.dim(), b.dim());
        for i in 0..len {
            let c = f.get(offset + i, 0);
            if c != 0 {
                op = op.add(&b.power(i).scale(c));
            }
        }
        space.map(&op)
    };
    let image = induced(&hom_first, 0, m).sum(&induced(&hom_second, m, m.saturating_sub(2)));
    if !image.is_subspace_of(&hom_src) {
        return Err(ModuleError::Dimension("induced map leaves Hom(P_l^(m-1), X)".into()));
    }
    Ok(hom_src.dim() - image.dim())
}

/// Matrix of `f_ℓ^m` on the ambient modules `P^{m−1} → P^m ⊕ P^{m−2}`,
/// checked to be a monomorphism of embeddings with cokernel `P_{ℓ−1}^{m−1}`.
pub fn picket_sequence_map(p: u32, l: usize, m: usize) -> Result<Matrix, ModuleError> {
    if l == 0 || l >= m {
        return Err(ModuleError::BadIndex(format!(
            "f_l^m needs 1 <= l < m, got l={l}, m={m}"
        )));
    }
    let src = Embedding::picket(p, l, m - 1)?;
    let tgt = Embedding::picket(p, l, m)?.direct_sum(&Embedding::picket(p, l - 1, m - 2)?)?;
    let mut f = Matrix::zeros(p, m + m - 2, m - 1);
    for i in 0..m - 1 {
        f.set(i + 1, i, 1);
        if i < m - 2 {
            f.set(m + i, i, p - 1);
        }
    }
    let (tb, sb) = (tgt.ambient().operator(), src.ambient().operator());
    if f.mul(sb) != tb.mul(&f) || f.rank() != m - 1 {
        return Err(ModuleError::Dimension("f_l^m is not a monomorphism".into()));
    }
    let image = Subspace::image(&f);
    if src.sub().map(&f) != image.intersect(tgt.sub()) {
        return Err(ModuleError::Dimension("f_l^m is not exact on submodules".into()));
    }
    // cokernel P_{ℓ−1}^{m−1}: dimensions of both ambient and submodule
    let coker_b = tgt.ambient().dim() - image.dim();
    let coker_a = tgt.sub().dim() - src.sub().dim();
    if coker_b != m - 1 || coker_a != l - 1 {
        return Err(ModuleError::Dimension("cokernel of f_l^m has the wrong size".into()));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::fixtures::{m1, m2, m3};
    use crate::embedding::{hom_space, random_corpus};
    use crate::partition::shapes_up_to;
    use crate::tableau::enumerate;
    use crate::tableau::fixtures as tf;

    #[test]
    fn picket_hom_matrix() {
        let h = socle_to_hom(&tf::picket_socle()).unwrap();
        assert_eq!(h.stored(4, 5), Some(5));
        for m in 0..=h.m_bound() {
            assert_eq!(h.get(0, m as i64), m.min(5));
        }
        assert_eq!(
            duallr_to_hom(&Embedding::picket(2, 4, 5).unwrap().dual_lr_tableau()).unwrap(),
            h
        );
    }

    #[test]
    fn m2_conversions() {
        let (sigma, gamma) = (tf::sigma2(), tf::gamma2_dual());
        let h = m2(2).hom_matrix();
        assert_eq!(socle_to_hom(&sigma).unwrap(), h);
        assert_eq!(duallr_to_hom(&gamma).unwrap(), h);
        assert_eq!(hom_to_socle(&h).unwrap(), sigma);
        assert_eq!(hom_to_duallr(&h).unwrap(), gamma);
        assert_eq!(socle_to_duallr(&sigma).unwrap(), gamma);
        assert_eq!(duallr_to_socle(&gamma).unwrap(), sigma);
    }

    #[test]
    fn fixtures_round_trip_through_the_hom_matrix() {
        for x in [m1(2), m3(3)] {
            let h = x.hom_matrix();
            assert_eq!(hom_to_socle(&h).unwrap(), x.socle_tableau());
            assert_eq!(hom_to_duallr(&h).unwrap(), x.dual_lr_tableau());
        }
    }

    #[test]
    fn trivial_cases() {
        let zero = HomMatrix::from_fn(1, 1, |_, _| 0);
        assert!(hom_to_socle(&zero).unwrap().is_empty());
        assert!(hom_to_duallr(&zero).unwrap().is_empty());
        let beta: Partition = "32".parse().unwrap();
        let empty = SkewTableau::empty(beta.clone());
        let d = socle_to_duallr(&empty).unwrap();
        assert_eq!(d.shape().alpha, beta);
        assert_eq!(d.shape().gamma, Partition::empty());
        assert_eq!(duallr_to_socle(&d).unwrap(), empty);
        // an empty dual LR-tableau belongs to (B ⊂ B)
        let h = duallr_to_hom(&empty).unwrap();
        for m in 0..=h.m_bound() {
            for r in 0..=h.l_bound().min(m) {
                assert_eq!(h.get(r as i64, m as i64), (1..=m).map(|j| beta.row(j)).sum::<usize>());
            }
        }
    }

    #[test]
    fn json_uses_null_below_the_diagonal() {
        let h = socle_to_hom(&tf::sigma2()).unwrap();
        let text = h.to_json();
        assert!(text.starts_with("{\"L\":5,\"M\":10,\"h\":[[0,"));
        assert!(text.contains("null"));
        assert_eq!(HomMatrix::from_json(&text).unwrap(), h);
        assert!(HomMatrix::from_json("{\"L\":0,\"M\":0,\"h\":[[null]]}").is_err());
    }

    #[test]
    fn inconsistent_matrices_are_rejected() {
        let mut h = socle_to_hom(&tf::sigma2()).unwrap();
        h.h[2][4] += 1;
        assert!(matches!(hom_to_socle(&h), Err(ConvertError::InconsistentMatrix(_))));
        assert!(matches!(hom_to_duallr(&h), Err(ConvertError::InconsistentMatrix(_))));
    }

    #[test]
    fn all_conversion_paths_commute_for_small_shapes() {
        for shape in shapes_up_to(8) {
            let duals = match shape.dual() {
                Some(d) => enumerate(&d, TableauKind::Lr),
                None => Vec::new(),
            };
            let mut images = Vec::new();
            for sigma in enumerate(&shape, TableauKind::Socle) {
                let h = socle_to_hom(&sigma).unwrap();
                let g = socle_to_duallr(&sigma).unwrap();
                assert_eq!(hom_to_duallr(&h).unwrap(), g);
                assert_eq!(duallr_to_hom(&g).unwrap(), h);
                assert_eq!(hom_to_socle(&h).unwrap(), sigma);
                assert_eq!(duallr_to_socle(&g).unwrap(), sigma);
                assert!(duals.contains(&g));
                images.push(g);
            }
            images.sort_by(|a, b| a.entries().cmp(b.entries()));
            images.dedup();
            assert_eq!(images.len(), duals.len(), "{shape}");
        }
    }

    #[test]
    fn defect_examples() {
        let x = m2(2);
        assert_eq!(defect(&x, 2, 4).unwrap(), 1);
        let z = Embedding::zero(2).unwrap();
        assert_eq!(defect(&z, 1, 3).unwrap(), 0);
        assert!(defect(&x, 0, 3).is_err());
        assert!(defect(&x, 4, 3).is_err());
        let alpha = x.alpha();
        for l in 1..=alpha.first() {
            let total: usize = (l..=l + x.beta().first()).map(|m| defect(&x, l, m).unwrap()).sum();
            assert_eq!(total, alpha.row(l));
        }
    }

    /// Cokernel of `Hom(f, X)` computed from the full Hom spaces as matrices.
    fn defect_by_solving(x: &Embedding, l: usize, m: usize) -> usize {
        let p = x.prime();
        let f = picket_sequence_map(p, l, m).unwrap();
        let src = Embedding::picket(p, l, m - 1).unwrap();
        let tgt = Embedding::picket(p, l, m)
            .unwrap()
            .direct_sum(&Embedding::picket(p, l - 1, m - 2).unwrap())
            .unwrap();
        let composed: Vec<Vec<u32>> = hom_space(&tgt, x)
            .unwrap()
            .iter()
            .map(|g| {
                let c = g.mul(&f);
                (0..c.nrows()).flat_map(|i| c.row(i).to_vec()).collect()
            })
            .collect();
        let n = x.ambient().dim() * (m - 1);
        let rank = if composed.is_empty() {
            0
        } else {
            Matrix::from_rows(p, n, &composed).rank()
        };
        hom_space(&src, x).unwrap().len() - rank
    }

    #[test]
    fn defect_matches_multiplicities_and_the_solver() {
        let mut corpus = random_corpus(3, 23, 12, 6).unwrap();
        corpus.push(m2(3));
        for x in &corpus {
            let sigma = x.socle_tableau();
            let h = x.hom_matrix();
            for l in 1..=x.alpha().first() {
                for m in l + 1..=l + x.beta().first() {
                    let d = defect(x, l, m).unwrap();
                    assert_eq!(d, sigma.multiplicity(l, m - l));
                    assert_eq!(d as i64, socle_multiplicity_from_hom(&h, l, m - l));
                    if x.ambient().dim() <= 7 {
                        assert_eq!(d, defect_by_solving(x, l, m));
                    }
                }
            }
        }
    }
}
