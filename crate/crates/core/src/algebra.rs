//! Commutative algebras given by structure constants, with a Frobenius form.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::linalg::{rank_of, Matrix};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("scalar {0} does not belong to the algebra's field")]
    ForeignScalar(String),
    #[error("not commutative: e{i}*e{j} and e{j}*e{i} differ in coordinate {k}")]
    NotCommutative { i: usize, j: usize, k: usize },
    #[error("Gram matrix is not symmetric at ({i}, {j})")]
    GramNotSymmetric { i: usize, j: usize },
    #[error("form is not Frobenius: (e{i}*e{j}, e{k}) != (e{i}, e{j}*e{k})")]
    NotFrobenius { i: usize, j: usize, k: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("vectors are linearly dependent")]
    DependentBasis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraId(u64);

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

impl AlgebraId {
    fn fresh() -> Self {
        AlgebraId(NEXT_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// A finite-dimensional commutative algebra with a symmetric Frobenius form.
///
/// Construction validates commutativity, symmetry of the Gram matrix and
/// `(e_i e_j, e_k) = (e_i, e_j e_k)` on all basis triples.
#[derive(Debug, Clone)]
pub struct Algebra {
    id: AlgebraId,
    field: FieldSpec,
    dim: usize,
    mult: Vec<Scalar>,
    table: Vec<Vec<(usize, Scalar)>>,
    gram: Matrix,
}

/// An element of a specific algebra, in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    algebra: AlgebraId,
    coords: Vec<Scalar>,
}

/// A subspace given by a linearly independent basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<Element>,
}

#[derive(Debug, Clone)]
pub struct LeibnizFailure {
    pub i: usize,
    pub j: usize,
    pub residual: Element,
}

#[derive(Debug, Clone)]
pub struct DerivationReport {
    pub pairs_checked: usize,
    pub failures: Vec<LeibnizFailure>,
}

impl DerivationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct AutomorphismReport {
    pub invertible: bool,
    pub failures: Vec<LeibnizFailure>,
}

impl AutomorphismReport {
    pub fn passed(&self) -> bool {
        self.invertible && self.failures.is_empty()
    }
}

impl Algebra {
    /// Builds an algebra from a dense tensor `mult[i][j][k]` and Gram matrix.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        mult: Vec<Vec<Vec<Scalar>>>,
        gram: Matrix,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        check_len(dim, mult.len())?;
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for plane in mult {
            check_len(dim, plane.len())?;
            for row in plane {
                check_len(dim, row.len())?;
                flat.extend(row);
            }
        }
        Self::from_flat(field, dim, flat, gram)
    }

    /// Builds an algebra from sparse products `e_i e_j = Σ s e_k`, listed for
    /// `i <= j` only; entries are mirrored to `(j, i)`.
    pub fn from_products(
        field: FieldSpec,
        dim: usize,
        products: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        gram: Matrix,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        let mut flat = vec![field.zero(); dim * dim * dim];
        for (i, j, k, s) in products {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(AlgebraError::DimensionMismatch { expected: dim, found: idx + 1 });
                }
            }
            for (p, q) in [(i, j), (j, i)] {
                let at = (p * dim + q) * dim + k;
                flat[at] = field.add(&flat[at], &s);
                if i == j {
                    break;
                }
            }
        }
        Self::from_flat(field, dim, flat, gram)
    }

    fn from_flat(
        field: FieldSpec,
        dim: usize,
        mult: Vec<Scalar>,
        gram: Matrix,
    ) -> Result<Self, AlgebraError> {
        if gram.rows() != dim || gram.cols() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, found: gram.rows() });
        }
        if gram.field() != field {
            return Err(AlgebraError::ForeignScalar(format!("Gram matrix over {}", gram.field())));
        }
        for s in mult.iter().chain((0..dim * dim).map(|t| gram.get(t / dim, t % dim))) {
            if !field.owns(s) {
                return Err(AlgebraError::ForeignScalar(s.to_string()));
            }
        }
        let c = |i: usize, j: usize, k: usize| &mult[(i * dim + j) * dim + k];
        for i in 0..dim {
            for j in i + 1..dim {
                for k in 0..dim {
                    if c(i, j, k) != c(j, i, k) {
                        return Err(AlgebraError::NotCommutative { i, j, k });
                    }
                }
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if gram.get(i, j) != gram.get(j, i) {
                    return Err(AlgebraError::GramNotSymmetric { i, j });
                }
            }
        }
        let table: Vec<Vec<(usize, Scalar)>> = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let s = &mult[ij * dim + k];
                        (!field.is_zero(s)).then(|| (k, s.clone()))
                    })
                    .collect()
            })
            .collect();
        let alg = Algebra { id: AlgebraId::fresh(), field, dim, mult, table, gram };
        alg.check_frobenius()?;
        Ok(alg)
    }

    fn check_frobenius(&self) -> Result<(), AlgebraError> {
        let f = self.field;
        let n = self.dim;
        // (e_i e_j, e_k) as a dense table
        let pair_form = |i: usize, j: usize, k: usize| {
            self.table[i * n + j]
                .iter()
                .fold(f.zero(), |acc, (l, s)| f.add(&acc, &f.mul(s, self.gram.get(*l, k))))
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = pair_form(i, j, k);
                    let rhs = pair_form(j, k, i);
                    if lhs != rhs {
                        return Err(AlgebraError::NotFrobenius { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero entries of `e_i e_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Same field, dimension, structure constants and Gram matrix.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.mult == other.mult
            && self.gram == other.gram
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element, AlgebraError> {
        check_len(self.dim, coords.len())?;
        if let Some(s) = coords.iter().find(|s| !self.field.owns(s)) {
            return Err(AlgebraError::ForeignScalar(s.to_string()));
        }
        Ok(self.wrap(coords))
    }

    pub(crate) fn wrap(&self, coords: Vec<Scalar>) -> Element {
        debug_assert_eq!(coords.len(), self.dim);
        Element { algebra: self.id, coords }
    }

    pub fn zero(&self) -> Element {
        self.wrap(vec![self.field.zero(); self.dim])
    }

    pub fn basis_element(&self, i: usize) -> Element {
        self.wrap(self.unit(i))
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim).map(|i| self.basis_element(i)).collect()
    }

    pub(crate) fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn owns(&self, x: &Element) -> bool {
        x.algebra == self.id
    }

    fn check(&self, x: &Element) -> Result<(), AlgebraError> {
        if self.owns(x) {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.wrap(self.mul_raw(&x.coords, &y.coords)))
    }

    pub fn form(&self, x: &Element, y: &Element) -> Result<Scalar, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.form_raw(&x.coords, &y.coords))
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.wrap(self.add_raw(&x.coords, &y.coords)))
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.wrap(self.sub_raw(&x.coords, &y.coords)))
    }

    pub fn scale(&self, s: &Scalar, x: &Element) -> Result<Element, AlgebraError> {
        self.check(x)?;
        Ok(self.wrap(self.scale_raw(s, &x.coords)))
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        self.is_zero_raw(&x.coords)
    }

    pub(crate) fn mul_raw(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let terms = &self.table[i * n + j];
                if terms.is_empty() {
                    continue;
                }
                let w = f.mul(xi, yj);
                for (k, s) in terms {
                    out[*k] = f.add(&out[*k], &f.mul(&w, s));
                }
            }
        }
        out
    }

    pub(crate) fn form_raw(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let f = self.field;
        let gy = self.gram.apply(y);
        x.iter().zip(&gy).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
    }

    pub(crate) fn add_raw(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub(crate) fn sub_raw(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub(crate) fn scale_raw(&self, s: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
        x.iter().map(|a| self.field.mul(s, a)).collect()
    }

    pub(crate) fn is_zero_raw(&self, x: &[Scalar]) -> bool {
        x.iter().all(|a| self.field.is_zero(a))
    }

    /// `L_x`: column `j` holds the coordinates of `x e_j`.
    pub fn left_mul_matrix(&self, x: &Element) -> Matrix {
        self.left_mul_raw(&x.coords)
    }

    pub(crate) fn left_mul_raw(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul_raw(x, &self.unit(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// `[L_x, L_y] = L_x L_y - L_y L_x`.
    pub fn commutator_leftmul(&self, x: &Element, y: &Element) -> Result<Matrix, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        let lx = self.left_mul_raw(&x.coords);
        let ly = self.left_mul_raw(&y.coords);
        Ok(lx.mul(&ly).sub(&ly.mul(&lx)))
    }

    pub fn apply(&self, m: &Matrix, x: &Element) -> Result<Element, AlgebraError> {
        self.check(x)?;
        self.check_square(m)?;
        Ok(self.wrap(m.apply(&x.coords)))
    }

    fn check_square(&self, m: &Matrix) -> Result<(), AlgebraError> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: m.rows() });
        }
        Ok(())
    }

    /// Leibniz rule `D(e_i e_j) = e_i D(e_j) + D(e_i) e_j` on all pairs `i <= j`.
    pub fn is_derivation(&self, d: &Matrix) -> Result<DerivationReport, AlgebraError> {
        self.check_square(d)?;
        let n = self.dim;
        let images: Vec<Vec<Scalar>> = (0..n).map(|i| d.column(i)).collect();
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i..n {
                let lhs = d.apply(&self.mul_raw(&self.unit(i), &self.unit(j)));
                let rhs = self.add_raw(
                    &self.mul_raw(&self.unit(i), &images[j]),
                    &self.mul_raw(&images[i], &self.unit(j)),
                );
                let residual = self.sub_raw(&lhs, &rhs);
                if !self.is_zero_raw(&residual) {
                    failures.push(LeibnizFailure { i, j, residual: self.wrap(residual) });
                }
            }
        }
        Ok(DerivationReport { pairs_checked: n * (n + 1) / 2, failures })
    }

    /// Invertibility plus `M(e_i e_j) = M(e_i) M(e_j)` on all pairs `i <= j`.
    pub fn is_automorphism(&self, m: &Matrix) -> Result<AutomorphismReport, AlgebraError> {
        self.check_square(m)?;
        let n = self.dim;
        let images: Vec<Vec<Scalar>> = (0..n).map(|i| m.column(i)).collect();
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i..n {
                let lhs = m.apply(&self.mul_raw(&self.unit(i), &self.unit(j)));
                let rhs = self.mul_raw(&images[i], &images[j]);
                let residual = self.sub_raw(&lhs, &rhs);
                if !self.is_zero_raw(&residual) {
                    failures.push(LeibnizFailure { i, j, residual: self.wrap(residual) });
                }
            }
        }
        Ok(AutomorphismReport { invertible: m.rank() == n, failures })
    }

    pub fn nullspace(&self, m: &Matrix) -> Result<Subspace, AlgebraError> {
        if m.cols() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: m.cols() });
        }
        Ok(Subspace { basis: m.nullspace().into_iter().map(|v| self.wrap(v)).collect() })
    }

    /// Kernel of the Frobenius form.
    pub fn radical(&self) -> Subspace {
        Subspace { basis: self.gram.nullspace().into_iter().map(|v| self.wrap(v)).collect() }
    }

    pub fn subspace(&self, basis: Vec<Element>) -> Result<Subspace, AlgebraError> {
        for b in &basis {
            self.check(b)?;
        }
        let vectors: Vec<Vec<Scalar>> = basis.iter().map(|b| b.coords.clone()).collect();
        if rank_of(self.field, &vectors) != vectors.len() {
            return Err(AlgebraError::DependentBasis);
        }
        Ok(Subspace { basis })
    }

    /// Whether `x` lies in the span of `s`.
    pub fn in_span(&self, s: &Subspace, x: &Element) -> bool {
        if self.is_zero(x) {
            return true;
        }
        let mut vectors: Vec<Vec<Scalar>> = s.basis.iter().map(|b| b.coords.clone()).collect();
        vectors.push(x.coords.clone());
        rank_of(self.field, &vectors) == s.dim()
    }
}

fn check_len(expected: usize, found: usize) -> Result<(), AlgebraError> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { expected, found })
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_structure(other)
    }
}

impl Element {
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn algebra_id(&self) -> AlgebraId {
        self.algebra
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }
}

impl fmt::Display for Element {
    /// Formats as a linear combination such as `1/2*e0 - e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            let text = c.to_string();
            if text == "0" {
                continue;
            }
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if mag == "1" {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{mag}*e{i}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Subspace {
    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
}
