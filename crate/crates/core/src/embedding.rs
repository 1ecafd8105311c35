//! Embeddings `(A ⊂ B)` of modules over `F_p[T]/(T^N)` and their invariants.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::convert::HomMatrix;
use crate::dvrmod::{check_prime, FpModule, Subspace};
use crate::error::ModuleError;
use crate::fp::Matrix;
use crate::partition::{partitions_of, Partition, ShapeTriple};
use crate::tableau::{from_chain, PartitionChain, SkewTableau, TableauKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    ambient: FpModule,
    sub: Subspace,
}

/// On-disk form: generators of `A` inside `N_β`, each given by one
/// coefficient list per summand in the basis `1, p, p^2, …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub prime: u32,
    pub beta: Partition,
    pub generators: Vec<Vec<Vec<u32>>>,
}

impl Embedding {
    pub fn new(ambient: FpModule, sub: Subspace) -> Result<Self, ModuleError> {
        if sub.ambient_dim() != ambient.dim() {
            return Err(ModuleError::Dimension(format!(
                "subspace of F_p^{} in a module of dimension {}",
                sub.ambient_dim(),
                ambient.dim()
            )));
        }
        if sub.prime() != ambient.prime() {
            return Err(ModuleError::PrimeMismatch(ambient.prime(), sub.prime()));
        }
        if !ambient.is_invariant(&sub) {
            return Err(ModuleError::NotInvariant);
        }
        Ok(Embedding { ambient, sub })
    }

    pub fn zero(p: u32) -> Result<Self, ModuleError> {
        let b = FpModule::standard(p, &Partition::empty())?;
        let a = b.zero_submodule();
        Ok(Embedding { ambient: b, sub: a })
    }

    /// `(A ⊂ N_β)` with `A` generated by the given vectors.
    pub fn from_generators(p: u32, beta: &Partition, generators: &[Vec<Vec<u32>>]) -> Result<Self, ModuleError> {
        let b = FpModule::standard(p, beta)?;
        let vectors = generators
            .iter()
            .map(|g| b.vector_from_coeffs(g))
            .collect::<Result<Vec<_>, _>>()?;
        let a = b.submodule_span(&vectors)?;
        Ok(Embedding { ambient: b, sub: a })
    }

    /// The picket `P_ℓ^m = (soc^ℓ P^m ⊂ P^m)`.
    pub fn picket(p: u32, l: usize, m: usize) -> Result<Self, ModuleError> {
        if l > m {
            return Err(ModuleError::BadIndex(format!("picket P_{l}^{m} needs l <= m")));
        }
        let beta = Partition::new(vec![m])?;
        let b = FpModule::standard(p, &beta)?;
        let a = b.soc_layer(&b.whole(), l);
        Ok(Embedding { ambient: b, sub: a })
    }

    pub fn prime(&self) -> u32 {
        self.ambient.prime()
    }

    pub fn ambient(&self) -> &FpModule {
        &self.ambient
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    pub fn alpha(&self) -> Partition {
        self.ambient.submodule_type(&self.sub).expect("invariant")
    }

    pub fn beta(&self) -> Partition {
        self.ambient.module_type()
    }

    pub fn gamma(&self) -> Partition {
        self.ambient.quotient_type(&self.sub).expect("invariant")
    }

    pub fn shape(&self) -> ShapeTriple {
        ShapeTriple::new(self.alpha(), self.beta(), self.gamma()).expect("type triple of an embedding")
    }

    fn quotient(&self, s: &Subspace) -> Partition {
        self.ambient.quotient_type(s).expect("layers are submodules")
    }

    /// `σ^(i) = type(B / soc^i A)` for `i = 0..=α₁`.
    pub fn socle_chain(&self) -> Vec<Partition> {
        let s = self.alpha().first();
        (0..=s)
            .map(|i| self.quotient(&self.ambient.soc_layer(&self.sub, i)))
            .collect()
    }

    /// `γ^(i) = type(B / rad^i A)` for `i = 0..=α₁`.
    pub fn lr_chain(&self) -> Vec<Partition> {
        let s = self.alpha().first();
        (0..=s)
            .map(|i| self.quotient(&self.ambient.rad_layer(&self.sub, i)))
            .collect()
    }

    pub fn socle_tableau(&self) -> SkewTableau {
        from_chain(&PartitionChain {
            kind: TableauKind::Socle,
            chain: self.socle_chain(),
        })
        .expect("socle series gives a socle tableau")
    }

    pub fn lr_tableau(&self) -> SkewTableau {
        from_chain(&PartitionChain {
            kind: TableauKind::Lr,
            chain: self.lr_chain(),
        })
        .expect("radical series gives an LR-tableau")
    }

    /// `(Ann A ⊂ D B)`, of type `(γ, β, α)`.
    pub fn dual(&self) -> Embedding {
        Embedding {
            ambient: self.ambient.dual_module(),
            sub: self.ambient.annihilator(&self.sub),
        }
    }

    /// Socle tableau of the dual embedding.
    pub fn dual_socle_tableau(&self) -> SkewTableau {
        self.dual().socle_tableau()
    }

    /// LR-tableau of the dual embedding.
    pub fn dual_lr_tableau(&self) -> SkewTableau {
        self.dual().lr_tableau()
    }

    /// Direct sum; summands of standard modules are merged in decreasing length.
    pub fn direct_sum(&self, other: &Embedding) -> Result<Embedding, ModuleError> {
        if self.prime() != other.prime() {
            return Err(ModuleError::PrimeMismatch(self.prime(), other.prime()));
        }
        let p = self.prime();
        let (n1, n2) = (self.ambient.dim(), other.ambient.dim());
        let mut vectors: Vec<Vec<u32>> = self
            .sub
            .vectors()
            .into_iter()
            .map(|mut v| {
                v.extend(std::iter::repeat_n(0, n2));
                v
            })
            .collect();
        vectors.extend(other.sub.vectors().into_iter().map(|v| {
            let mut w = vec![0; n1];
            w.extend(v);
            w
        }));
        let sub = Subspace::of_vectors(p, n1 + n2, &vectors);
        match (self.ambient.blocks(), other.ambient.blocks()) {
            (Some(b1), Some(b2)) => {
                let mut runs: Vec<(usize, usize)> = Vec::new();
                let mut offset = 0;
                for &len in b1.parts().iter().chain(b2.parts()) {
                    runs.push((len, offset));
                    offset += len;
                }
                runs.sort_by_key(|r| std::cmp::Reverse(r.0));
                let mut perm = vec![0; n1 + n2];
                let mut target = 0;
                for &(len, start) in &runs {
                    for i in 0..len {
                        perm[start + i] = target + i;
                    }
                    target += len;
                }
                let beta = Partition::new(runs.iter().map(|r| r.0).collect())?;
                Embedding::new(FpModule::standard(p, &beta)?, sub.permute(&perm))
            }
            _ => {
                let op = Matrix::block_diag(p, &[self.ambient.operator(), other.ambient.operator()]);
                Embedding::new(FpModule::new(p, op)?, sub)
            }
        }
    }

    /// Image of the embedding under an automorphism `g` of `B` commuting with `T`.
    pub fn transport(&self, g: &Matrix) -> Result<Embedding, ModuleError> {
        let t = self.ambient.operator();
        if g.nrows() != t.nrows() || g.ncols() != t.ncols() || g.rank() != t.nrows() {
            return Err(ModuleError::Dimension("not an automorphism".into()));
        }
        if g.mul(t) != t.mul(g) {
            return Err(ModuleError::NotInvariant);
        }
        Embedding::new(self.ambient.clone(), self.sub.map(g))
    }

    /// `len (soc^ℓ A ∩ rad^{r−1} B) / (soc^{ℓ−1} A ∩ rad^{r−1} B)`.
    pub fn entries_below(&self, l: usize, r: usize) -> usize {
        assert!(l >= 1 && r >= 1, "entries_below needs l, r >= 1");
        let rad = self.ambient.rad_layer(&self.ambient.whole(), r - 1);
        let upper = self.ambient.soc_layer(&self.sub, l).intersect(&rad);
        let lower = self.ambient.soc_layer(&self.sub, l - 1).intersect(&rad);
        upper.dim() - lower.dim()
    }

    /// Elements `b` with `p^m b = 0` and `p^{m−ℓ} b ∈ A`; each determines a
    /// morphism `P_ℓ^m → X` by `1 ↦ b`.
    pub fn picket_hom_space(&self, l: usize, m: usize) -> Subspace {
        assert!(l <= m, "picket P_{l}^{m} needs l <= m");
        let killed = self.ambient.preimage(&self.ambient.zero_submodule(), m);
        killed.intersect(&self.ambient.preimage(&self.sub, m - l))
    }

    /// `h_ℓ^m = len Hom(P_ℓ^m, X)`.
    pub fn picket_hom_dim(&self, l: usize, m: usize) -> usize {
        self.picket_hom_space(l, m).dim()
    }

    pub fn hom_matrix(&self) -> HomMatrix {
        let (l, m) = HomMatrix::bounds(self.alpha().first(), self.beta().first());
        HomMatrix::from_fn(l, m, |i, j| self.picket_hom_dim(i, j))
    }

    /// Minimal generating set of `A` (a lift of a basis of `A / pA`).
    pub fn minimal_generators(&self) -> Vec<Vec<u32>> {
        let mut current = self.ambient.rad_layer(&self.sub, 1);
        let mut gens = Vec::new();
        for v in self.sub.vectors() {
            if !current.contains(&v) {
                current = current.sum(&Subspace::of_vectors(
                    self.prime(),
                    self.ambient.dim(),
                    std::slice::from_ref(&v),
                ));
                gens.push(v);
            }
        }
        gens
    }

    pub fn to_json_value(&self) -> Result<EmbeddingJson, ModuleError> {
        let beta = self.ambient.blocks().ok_or(ModuleError::NotStandard)?.clone();
        let generators = self
            .minimal_generators()
            .iter()
            .map(|g| self.ambient.coeffs_of_vector(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EmbeddingJson {
            prime: self.prime(),
            beta,
            generators,
        })
    }

    pub fn to_json(&self) -> Result<String, ModuleError> {
        Ok(serde_json::to_string(&self.to_json_value()?).expect("serializable"))
    }

    pub fn from_json_value(j: &EmbeddingJson) -> Result<Self, ModuleError> {
        Embedding::from_generators(j.prime, &j.beta, &j.generators)
    }

    pub fn from_json(text: &str) -> Result<Self, ModuleError> {
        let j: EmbeddingJson = serde_json::from_str(text).map_err(|e| ModuleError::Dimension(e.to_string()))?;
        Embedding::from_json_value(&j)
    }
}

/// All morphisms `X → Y`: linear `F` with `F T_X = T_Y F` and `F(A_X) ⊆ A_Y`,
/// as a basis of `dim B_Y × dim B_X` matrices.
pub fn hom_space(x: &Embedding, y: &Embedding) -> Result<Vec<Matrix>, ModuleError> {
    let p = x.prime();
    if y.prime() != p {
        return Err(ModuleError::PrimeMismatch(p, y.prime()));
    }
    let (nx, ny) = (x.ambient.dim(), y.ambient.dim());
    let nvars = nx * ny;
    if nvars == 0 {
        return Ok(Vec::new());
    }
    let var = |i: usize, j: usize| i * nx + j;
    let (tx, ty) = (x.ambient.operator(), y.ambient.operator());
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for i in 0..ny {
        for j in 0..nx {
            let mut eq = vec![0u32; nvars];
            for k in 0..nx {
                let v = tx.get(k, j);
                if v != 0 {
                    eq[var(i, k)] = (eq[var(i, k)] + v) % p;
                }
            }
            for k in 0..ny {
                let v = ty.get(i, k);
                if v != 0 {
                    eq[var(k, j)] = (eq[var(k, j)] + p - v) % p;
                }
            }
            rows.push(eq);
        }
    }
    let ann = y.sub.perp();
    for a in x.sub.vectors() {
        for w in ann.vectors() {
            let mut eq = vec![0u32; nvars];
            for i in 0..ny {
                for j in 0..nx {
                    eq[var(i, j)] = ((w[i] as u64 * a[j] as u64) % p as u64) as u32;
                }
            }
            rows.push(eq);
        }
    }
    let system = Matrix::from_rows(p, nvars, &rows);
    let kernel = system.nullspace();
    Ok((0..kernel.nrows())
        .map(|k| {
            let mut f = Matrix::zeros(p, ny, nx);
            for i in 0..ny {
                for j in 0..nx {
                    f.set(i, j, kernel.get(k, var(i, j)));
                }
            }
            f
        })
        .collect())
}

pub fn hom_dim(x: &Embedding, y: &Embedding) -> Result<usize, ModuleError> {
    Ok(hom_space(x, y)?.len())
}

/// Random embedding in `N_β` with `|β| ≤ max_weight`: up to three generators,
/// each a random vector whose coordinates are nonzero with a randomly chosen
/// density.
pub fn random_embedding<R: Rng>(rng: &mut R, p: u32, max_weight: usize) -> Result<Embedding, ModuleError> {
    check_prime(p)?;
    let n = rng.gen_range(1..=max_weight.max(1));
    let beta = partitions_of(n).choose(rng).cloned().unwrap_or_else(Partition::empty);
    let g = rng.gen_range(1..=3);
    let generators: Vec<Vec<Vec<u32>>> = (0..g)
        .map(|_| {
            let density = *[0.2, 0.5, 1.0].choose(rng).unwrap();
            beta.parts()
                .iter()
                .map(|&len| {
                    (0..len)
                        .map(|_| if rng.gen_bool(density) { rng.gen_range(1..p) } else { 0 })
                        .collect()
                })
                .collect()
        })
        .collect();
    Embedding::from_generators(p, &beta, &generators)
}

/// `count` distinct random embeddings from a fixed seed.
pub fn random_corpus(p: u32, seed: u64, count: usize, max_weight: usize) -> Result<Vec<Embedding>, ModuleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        let x = random_embedding(&mut rng, p, max_weight)?;
        if seen.insert((x.beta(), x.sub.clone())) || attempts > 50 * count {
            out.push(x);
        }
    }
    Ok(out)
}

/// Generator data with 0/1 coefficients, meaningful over every prime.
pub fn random_integer_data<R: Rng>(rng: &mut R, max_weight: usize) -> EmbeddingData {
    let n = rng.gen_range(1..=max_weight.max(1));
    let beta = partitions_of(n).choose(rng).cloned().unwrap_or_else(Partition::empty);
    let g = rng.gen_range(1..=3);
    let generators = (0..g)
        .map(|_| {
            let density = *[0.2, 0.5, 1.0].choose(rng).unwrap();
            beta.parts()
                .iter()
                .map(|&len| (0..len).map(|_| u32::from(rng.gen_bool(density))).collect())
                .collect()
        })
        .collect();
    EmbeddingData { beta, generators }
}

/// `count` distinct seeded items of [`random_integer_data`].
pub fn integer_corpus(seed: u64, count: usize, max_weight: usize) -> Vec<EmbeddingData> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        let d = random_integer_data(&mut rng, max_weight);
        if seen.insert(d.clone()) || attempts > 50 * count {
            out.push(d);
        }
    }
    out
}

/// Ambient type and generator coefficients, independent of the prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbeddingData {
    pub beta: Partition,
    pub generators: Vec<Vec<Vec<u32>>>,
}

impl EmbeddingData {
    /// The embedding over `F_p` spanned by the generators reduced mod `p`.
    pub fn reduce(&self, p: u32) -> Result<Embedding, ModuleError> {
        check_prime(p)?;
        let gens: Vec<Vec<Vec<u32>>> = self
            .generators
            .iter()
            .map(|g| g.iter().map(|b| b.iter().map(|&c| c % p).collect()).collect())
            .collect();
        Embedding::from_generators(p, &self.beta, &gens)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    pub fn m1(p: u32) -> Embedding {
        let x = Embedding::picket(p, 4, 5).unwrap();
        x.direct_sum(&Embedding::picket(p, 0, 3).unwrap())
            .unwrap()
            .direct_sum(&Embedding::picket(p, 2, 2).unwrap())
            .unwrap()
    }

    /// Generators `pb + b″` and `pb′` in `N_(532)`.
    pub fn m2(p: u32) -> Embedding {
        Embedding::from_generators(
            p,
            &part("532"),
            &[vec![vec![0, 1], vec![], vec![1]], vec![vec![], vec![0, 1], vec![]]],
        )
        .unwrap()
    }

    /// Generators `pb + b′` and `pb′ + pb″` in `N_(532)`.
    pub fn m3(p: u32) -> Embedding {
        Embedding::from_generators(
            p,
            &part("532"),
            &[vec![vec![0, 1], vec![1], vec![]], vec![vec![], vec![0, 1], vec![0, 1]]],
        )
        .unwrap()
    }
}
