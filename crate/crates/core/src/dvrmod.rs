//! Finite-length modules over `F_p[T]/(T^N)`.
//!
//! A module is an `F_p` vector space with a nilpotent operator `T` playing
//! the role of multiplication by `p`. The standard module `N_λ` has one
//! Jordan block per column of `λ`; basis vector `offset_j + i` stands for
//! `p^i b_j`, so `T` maps it to `offset_j + i + 1` (or to zero at the top).

use crate::error::ModuleError;
pub use crate::fp::Subspace;
use crate::fp::{is_prime, Matrix, MAX_PRIME};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule {
    p: u32,
    op: Matrix,
    /// `powers[r] = T^r` for `r` up to the nilpotency index.
    powers: Vec<Matrix>,
    /// Block sizes when the operator is in standard Jordan form.
    blocks: Option<Partition>,
}

pub fn check_prime(p: u32) -> Result<(), ModuleError> {
    if is_prime(p) && p <= MAX_PRIME {
        Ok(())
    } else {
        Err(ModuleError::BadPrime(p))
    }
}

fn jordan_operator(p: u32, lambda: &Partition) -> Matrix {
    let n = lambda.weight();
    let mut op = Matrix::zeros(p, n, n);
    let mut offset = 0;
    for &len in lambda.parts() {
        for i in 0..len.saturating_sub(1) {
            op.set(offset + i + 1, offset + i, 1);
        }
        offset += len;
    }
    op
}

impl FpModule {
    /// Module with an arbitrary nilpotent operator.
    pub fn new(p: u32, op: Matrix) -> Result<Self, ModuleError> {
        check_prime(p)?;
        if op.prime() != p {
            return Err(ModuleError::PrimeMismatch(p, op.prime()));
        }
        if op.nrows() != op.ncols() {
            return Err(ModuleError::Dimension(format!(
                "operator is {}x{}",
                op.nrows(),
                op.ncols()
            )));
        }
        let n = op.nrows();
        let mut powers = vec![Matrix::identity(p, n)];
        while !powers.last().unwrap().is_zero() {
            if powers.len() > n {
                return Err(ModuleError::Dimension("operator is not nilpotent".into()));
            }
            let next = powers.last().unwrap().mul(&op);
            powers.push(next);
        }
        Ok(FpModule {
            p,
            op,
            powers,
            blocks: None,
        })
    }

    /// `N_λ`, the direct sum of cyclic modules of lengths `λ_1, λ_2, …`.
    pub fn standard(p: u32, lambda: &Partition) -> Result<Self, ModuleError> {
        let mut m = FpModule::new(p, jordan_operator(p, lambda))?;
        m.blocks = Some(lambda.clone());
        Ok(m)
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.op.nrows()
    }

    pub fn operator(&self) -> &Matrix {
        &self.op
    }

    /// Smallest `N` with `T^N = 0`.
    pub fn nilpotency(&self) -> usize {
        self.powers.len() - 1
    }

    /// `T^r` (zero beyond the nilpotency index).
    pub fn power(&self, r: usize) -> Matrix {
        match self.powers.get(r) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.p, self.dim(), self.dim()),
        }
    }

    fn power_ref(&self, r: usize) -> &Matrix {
        &self.powers[r.min(self.powers.len() - 1)]
    }

    pub fn blocks(&self) -> Option<&Partition> {
        self.blocks.as_ref()
    }

    /// Index of the basis vector `p^i b_j` (0-based `j` and `i`) of a standard module.
    pub fn basis_index(&self, summand: usize, power: usize) -> Result<usize, ModuleError> {
        let blocks = self.blocks.as_ref().ok_or(ModuleError::NotStandard)?;
        let parts = blocks.parts();
        if summand >= parts.len() || power >= parts[summand] {
            return Err(ModuleError::BadIndex(format!("p^{power} b_{summand}")));
        }
        Ok(parts[..summand].iter().sum::<usize>() + power)
    }

    /// Vector of a standard module from per-summand coefficient lists in the basis `1, p, p^2, …`.
    pub fn vector_from_coeffs(&self, coeffs: &[Vec<u32>]) -> Result<Vec<u32>, ModuleError> {
        let blocks = self.blocks.as_ref().ok_or(ModuleError::NotStandard)?;
        if coeffs.len() != blocks.len() {
            return Err(ModuleError::Dimension(format!(
                "{} coefficient lists for {} summands",
                coeffs.len(),
                blocks.len()
            )));
        }
        let mut v = Vec::with_capacity(self.dim());
        for (c, &len) in coeffs.iter().zip(blocks.parts()) {
            if c.len() > len {
                return Err(ModuleError::Dimension(format!(
                    "{} coefficients for a summand of length {len}",
                    c.len()
                )));
            }
            v.extend(c.iter().map(|x| x % self.p));
            v.extend(std::iter::repeat_n(0, len - c.len()));
        }
        Ok(v)
    }

    /// Inverse of [`FpModule::vector_from_coeffs`].
    pub fn coeffs_of_vector(&self, v: &[u32]) -> Result<Vec<Vec<u32>>, ModuleError> {
        let blocks = self.blocks.as_ref().ok_or(ModuleError::NotStandard)?;
        let mut out = Vec::new();
        let mut offset = 0;
        for &len in blocks.parts() {
            out.push(v[offset..offset + len].to_vec());
            offset += len;
        }
        Ok(out)
    }

    fn kernel_dims(&self, sub: Option<&Subspace>) -> Vec<usize> {
        let base = sub.map_or(0, Subspace::dim);
        (0..=self.nilpotency())
            .map(|r| {
                let k = match sub {
                    None => self.dim() - self.power_ref(r).rank(),
                    Some(s) => s.preimage(self.power_ref(r)).dim(),
                };
                k - base
            })
            .collect()
    }

    fn type_from_kernel_dims(dims: &[usize]) -> Partition {
        let rows: Vec<usize> = dims.windows(2).map(|w| w[1] - w[0]).collect();
        Partition::from_row_lengths(rows).expect("kernel dimensions of a nilpotent operator")
    }

    /// Isomorphism type of the module.
    pub fn module_type(&self) -> Partition {
        FpModule::type_from_kernel_dims(&self.kernel_dims(None))
    }

    /// Isomorphism type of `M/S`.
    pub fn quotient_type(&self, s: &Subspace) -> Result<Partition, ModuleError> {
        self.require_submodule(s)?;
        Ok(FpModule::type_from_kernel_dims(&self.kernel_dims(Some(s))))
    }

    /// Isomorphism type of the submodule `S` with the restricted operator.
    pub fn submodule_type(&self, s: &Subspace) -> Result<Partition, ModuleError> {
        self.require_submodule(s)?;
        let dims: Vec<usize> = (0..=self.nilpotency()).map(|r| self.soc_layer(s, r).dim()).collect();
        Ok(FpModule::type_from_kernel_dims(&dims))
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        s.map(&self.op).is_subspace_of(s)
    }

    fn require_submodule(&self, s: &Subspace) -> Result<(), ModuleError> {
        if s.ambient_dim() != self.dim() {
            return Err(ModuleError::Dimension(format!(
                "subspace of F_p^{} in a module of dimension {}",
                s.ambient_dim(),
                self.dim()
            )));
        }
        if s.prime() != self.p {
            return Err(ModuleError::PrimeMismatch(self.p, s.prime()));
        }
        if !self.is_invariant(s) {
            return Err(ModuleError::NotInvariant);
        }
        Ok(())
    }

    pub fn zero_submodule(&self) -> Subspace {
        Subspace::zero(self.p, self.dim())
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.p, self.dim())
    }

    /// Smallest submodule containing the generators.
    pub fn submodule_span(&self, generators: &[Vec<u32>]) -> Result<Subspace, ModuleError> {
        if let Some(g) = generators.iter().find(|g| g.len() != self.dim()) {
            return Err(ModuleError::Dimension(format!(
                "generator of length {} in a module of dimension {}",
                g.len(),
                self.dim()
            )));
        }
        let mut vectors = Vec::new();
        for g in generators {
            for t in &self.powers {
                vectors.push(t.apply(g));
            }
        }
        Ok(Subspace::of_vectors(self.p, self.dim(), &vectors))
    }

    /// `{a ∈ S : T^ℓ a = 0}`.
    pub fn soc_layer(&self, s: &Subspace, l: usize) -> Subspace {
        s.intersect(&Subspace::kernel(self.power_ref(l)))
    }

    /// `T^m(S)`.
    pub fn rad_layer(&self, s: &Subspace, m: usize) -> Subspace {
        s.map(self.power_ref(m))
    }

    /// `{b : T^r b ∈ S}`.
    pub fn preimage(&self, s: &Subspace, r: usize) -> Subspace {
        s.preimage(self.power_ref(r))
    }

    /// Coordinate permutation taking the transposed operator back to standard
    /// form: within each block the basis order is reversed.
    fn dual_permutation(&self) -> Option<Vec<usize>> {
        let blocks = self.blocks.as_ref()?;
        let mut perm = Vec::with_capacity(self.dim());
        let mut offset = 0;
        for &len in blocks.parts() {
            perm.extend((0..len).map(|i| offset + len - 1 - i));
            offset += len;
        }
        Some(perm)
    }

    /// The dual `Hom_F_p(M, F_p)` with the transposed operator. The dual of a
    /// standard module is returned in standard coordinates.
    pub fn dual_module(&self) -> FpModule {
        match &self.blocks {
            Some(b) => FpModule::standard(self.p, b).expect("prime already checked"),
            None => FpModule::new(self.p, self.op.transpose()).expect("transpose is nilpotent"),
        }
    }

    /// `{f ∈ D M : f(S) = 0}`, in the coordinates of [`FpModule::dual_module`].
    pub fn annihilator(&self, s: &Subspace) -> Subspace {
        let ann = s.perp();
        match self.dual_permutation() {
            Some(perm) => ann.permute(&perm),
            None => ann,
        }
    }
}
