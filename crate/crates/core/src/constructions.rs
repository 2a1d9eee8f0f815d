//! Fixture algebras with known axes: spin factors, Matsuo algebras of
//! transposition groups and a split algebra with a non-axis idempotent.

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Element};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar, ScalarError};

pub use crate::format::{load_algebra, save_algebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("invalid line structure: {0}")]
    InvalidLineStructure(String),
    #[error("bilinear form on V must be symmetric and square")]
    InvalidBilinearForm,
    #[error("vector must be nonempty with v.v = 1")]
    NotUnitVector,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `F1 + V` with the symmetric bilinear form `B` on `V = F^m`.
#[derive(Debug, Clone)]
pub struct SpinFactorSpec {
    pub field: FieldSpec,
    pub b: Matrix,
}

/// Points `0..points` with lines given as triples; eta is fixed at 1/2.
#[derive(Debug, Clone)]
pub struct MatsuoSpec {
    pub points: usize,
    pub lines: Vec<[usize; 3]>,
}

/// An algebra together with named elements (typically the axes `a` and `b`).
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub algebra: Algebra,
    pub elements: Vec<(String, Element)>,
}

impl Fixture {
    pub fn element(&self, name: &str) -> Option<&Element> {
        self.elements.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }
}

/// Basis `(1, w_1, ..., w_m)`; `(α1 + u)(β1 + v) = (αβ + B(u,v))1 + αv + βu`
/// and `(α1 + u, β1 + v) = 2αβ + 2B(u,v)`.
pub fn spin_factor(spec: &SpinFactorSpec) -> Result<Algebra, ConstructionError> {
    let f = spec.field;
    let b = &spec.b;
    if !b.is_square() || b.field() != f || *b != b.transpose() {
        return Err(ConstructionError::InvalidBilinearForm);
    }
    let m = b.rows();
    let mut products = vec![(0, 0, 0, f.one())];
    for i in 1..=m {
        products.push((0, i, i, f.one()));
        for j in i..=m {
            let s = b.get(i - 1, j - 1);
            if !f.is_zero(s) {
                products.push((i, j, 0, s.clone()));
            }
        }
    }
    let two = f.from_i64(2);
    let mut gram = Matrix::zeros(f, m + 1, m + 1);
    gram.set(0, 0, two.clone());
    for i in 0..m {
        for j in 0..m {
            gram.set(i + 1, j + 1, f.mul(&two, b.get(i, j)));
        }
    }
    Ok(Algebra::from_products(f, m + 1, products, gram)?)
}

fn half_sum(alg: &Algebra, idx: &[usize]) -> Element {
    let f = alg.field();
    let mut v = vec![f.zero(); alg.dim()];
    for &i in idx {
        v[i] = f.half();
    }
    alg.element(v).expect("coordinates sized to the algebra")
}

/// Spin factor with `m = 2`, `B(w1,w1) = B(w2,w2) = 1`, `B(w1,w2) = 2λ - 1`,
/// and axes `a = (1 + w1)/2`, `b = (1 + w2)/2` with `(a,b) = λ`.
///
/// For `λ = 1` this recipe would force `a = b`, so the degenerate
/// [`lambda_one_fixture`] is returned instead.
pub fn axis_pair_with_lambda(field: FieldSpec, lambda: &Scalar) -> Result<Fixture, ConstructionError> {
    axis_pair_with_lambda_dim(field, lambda, 2)
}

/// As [`axis_pair_with_lambda`], with `m - 2` further orthonormal directions
/// in `V` to enlarge the 1/2-eigenspace of `a`.
pub fn axis_pair_with_lambda_dim(
    field: FieldSpec,
    lambda: &Scalar,
    m: usize,
) -> Result<Fixture, ConstructionError> {
    let f = field;
    if *lambda == f.one() {
        return lambda_one_fixture(field);
    }
    if m < 2 {
        return Err(ConstructionError::InvalidBilinearForm);
    }
    let mut b = Matrix::identity(f, m);
    let off = f.sub(&f.mul(&f.from_i64(2), lambda), &f.one());
    b.set(0, 1, off.clone());
    b.set(1, 0, off);
    let algebra = spin_factor(&SpinFactorSpec { field, b })?;
    let a = half_sum(&algebra, &[0, 1]);
    let bb = half_sum(&algebra, &[0, 2]);
    let name = if m == 2 { format!("spin:{lambda}") } else { format!("spin:{lambda}:{m}") };
    Ok(Fixture { name, elements: vec![("a".into(), a), ("b".into(), bb)], algebra })
}

/// Spin factor with `B(u,u) = 1`, `B(v,v) = B(u,v) = 0`, axes `a = (1 + u)/2`
/// and `b = (1 + u + v)/2`, so that `(a,b) = 1`, `b0 = 0` and `v` spans the
/// radical of the form.
pub fn lambda_one_fixture(field: FieldSpec) -> Result<Fixture, ConstructionError> {
    let f = field;
    let mut b = Matrix::zeros(f, 2, 2);
    b.set(0, 0, f.one());
    let algebra = spin_factor(&SpinFactorSpec { field, b })?;
    let a = half_sum(&algebra, &[0, 1]);
    let bb = half_sum(&algebra, &[0, 1, 2]);
    Ok(Fixture { name: "lambda-one".into(), elements: vec![("a".into(), a), ("b".into(), bb)], algebra })
}

/// Matsuo algebra at eta = 1/2: `x x = x`, `x y = (x + y - z)/4` when
/// `{x, y, z}` is a line and `x y = 0` otherwise; `(x,x) = 1`, `(x,y) = 1/4`
/// for collinear points and `0` otherwise.
pub fn matsuo_algebra(field: FieldSpec, spec: &MatsuoSpec) -> Result<Algebra, ConstructionError> {
    let f = field;
    let n = spec.points;
    if n == 0 {
        return Err(ConstructionError::InvalidLineStructure("no points".into()));
    }
    let mut third: Vec<Option<usize>> = vec![None; n * n];
    for (li, line) in spec.lines.iter().enumerate() {
        let [x, y, z] = *line;
        if x >= n || y >= n || z >= n {
            return Err(ConstructionError::InvalidLineStructure(format!(
                "line {li} names a point outside 0..{n}"
            )));
        }
        if x == y || y == z || x == z {
            return Err(ConstructionError::InvalidLineStructure(format!("line {li} repeats a point")));
        }
        for (p, q, r) in [(x, y, z), (y, z, x), (x, z, y)] {
            for (s, t) in [(p, q), (q, p)] {
                if third[s * n + t].is_some() {
                    return Err(ConstructionError::InvalidLineStructure(format!(
                        "points {p} and {q} lie on two lines"
                    )));
                }
                third[s * n + t] = Some(r);
            }
        }
    }
    let quarter = f.mul(&f.half(), &f.half());
    let mut products = Vec::new();
    let mut gram = Matrix::identity(f, n);
    for x in 0..n {
        products.push((x, x, x, f.one()));
        for y in x + 1..n {
            if let Some(z) = third[x * n + y] {
                products.push((x, y, x, quarter.clone()));
                products.push((x, y, y, quarter.clone()));
                products.push((x, y, z, f.neg(&quarter)));
                gram.set(x, y, quarter.clone());
                gram.set(y, x, quarter.clone());
            }
        }
    }
    Ok(Algebra::from_products(f, n, products, gram)?)
}

/// Transpositions of `S_n` in lexicographic order `(12), (13), ..., (n-1 n)`,
/// with a line for every 3-subset of `{1..n}`.
pub fn transposition_space(n: usize) -> MatsuoSpec {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    let index = |p: (usize, usize)| pairs.iter().position(|&q| q == p).expect("pair listed");
    let mut lines = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                lines.push([index((i, j)), index((j, k)), index((i, k))]);
            }
        }
    }
    MatsuoSpec { points: pairs.len(), lines }
}

/// `F + F` with coordinatewise product and identity Gram matrix.
pub fn split_fixture(field: FieldSpec) -> Result<Algebra, ConstructionError> {
    let f = field;
    Ok(Algebra::from_products(f, 2, [(0, 0, 0, f.one()), (1, 1, 1, f.one())], Matrix::identity(f, 2))?)
}

/// Symmetric `n x n` matrices under `x.y = (xy + yx)/2` with the trace form
/// `(x,y) = tr(xy)`. Basis: `E_ii` and `E_ij + E_ji` (`i < j`) in row order.
pub fn symmetric_jordan(field: FieldSpec, n: usize) -> Result<Algebra, ConstructionError> {
    let f = field;
    if n == 0 {
        return Err(ConstructionError::InvalidBilinearForm);
    }
    let cells = sym_cells(n);
    let as_matrix = |idx: usize| {
        let (i, j) = cells[idx];
        let mut m = Matrix::zeros(f, n, n);
        m.set(i, j, f.one());
        m.set(j, i, f.one());
        m
    };
    let mats: Vec<Matrix> = (0..cells.len()).map(as_matrix).collect();
    let mut products = Vec::new();
    let mut gram = Matrix::zeros(f, cells.len(), cells.len());
    for p in 0..cells.len() {
        for q in p..cells.len() {
            let xy = mats[p].mul(&mats[q]);
            let sym = xy.add(&xy.transpose()).scale(&f.half());
            for (k, &(i, j)) in cells.iter().enumerate() {
                let s = sym.get(i, j);
                if !f.is_zero(s) {
                    products.push((p, q, k, s.clone()));
                }
            }
            let trace = (0..n).fold(f.zero(), |acc, i| f.add(&acc, xy.get(i, i)));
            gram.set(p, q, trace.clone());
            gram.set(q, p, trace);
        }
    }
    Ok(Algebra::from_products(f, cells.len(), products, gram)?)
}

fn sym_cells(n: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for i in 0..n {
        cells.push((i, i));
        for j in i + 1..n {
            cells.push((i, j));
        }
    }
    cells
}

/// Symmetric matrices of size `v.len()` with `a = E_11` and `b = v v^T`.
/// Requires `v.v = 1`; then `(a,b) = v_1^2`.
pub fn rank_one_pair(field: FieldSpec, v: &[Scalar]) -> Result<Fixture, ConstructionError> {
    let f = field;
    let n = v.len();
    let norm = v.iter().fold(f.zero(), |acc, x| f.add(&acc, &f.mul(x, x)));
    if n == 0 || norm != f.one() {
        return Err(ConstructionError::NotUnitVector);
    }
    let algebra = symmetric_jordan(f, n)?;
    let bb: Vec<Scalar> = sym_cells(n).iter().map(|&(i, j)| f.mul(&v[i], &v[j])).collect();
    let b = algebra.element(bb)?;
    let a = algebra.basis_element(0);
    let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    Ok(Fixture {
        name: format!("sym:{}", coords.join(",")),
        elements: vec![("a".into(), a), ("b".into(), b)],
        algebra,
    })
}

pub const FIXTURE_NAMES: &[&str] =
    &["spin:<lambda>", "lambda-one", "matsuo:S3", "matsuo:S4", "split", "sym:<v1,...,vn>"];

/// Resolves a built-in fixture name, over `field` (rationals by default).
///
/// Besides the documented names, `spin:<lambda>:<m>` widens `V`,
/// `matsuo:S<n>` accepts `3 <= n <= 7` and `sym:<v1,...,vn>` builds
/// [`rank_one_pair`].
pub fn named_fixture(name: &str, field: Option<FieldSpec>) -> Result<Fixture, ConstructionError> {
    let f = field.unwrap_or(FieldSpec::Rationals);
    let unknown = || ConstructionError::UnknownFixture(name.to_string());
    if let Some(rest) = name.strip_prefix("spin:") {
        let (lam, m) = match rest.split_once(':') {
            Some((l, m)) => (l, m.parse::<usize>().map_err(|_| unknown())?),
            None => (rest, 2),
        };
        let lambda = f.parse(lam)?;
        let mut fx = axis_pair_with_lambda_dim(f, &lambda, m)?;
        fx.name = name.to_string();
        return Ok(fx);
    }
    if let Some(rest) = name.strip_prefix("matsuo:S") {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        if !(3..=7).contains(&n) {
            return Err(unknown());
        }
        let algebra = matsuo_algebra(f, &transposition_space(n))?;
        let elements = vec![("a".into(), algebra.basis_element(0)), ("b".into(), algebra.basis_element(1))];
        return Ok(Fixture { name: name.to_string(), algebra, elements });
    }
    if let Some(rest) = name.strip_prefix("sym:") {
        let v = rest.split(',').map(|t| f.parse(t.trim())).collect::<Result<Vec<_>, _>>()?;
        let mut fx = rank_one_pair(f, &v)?;
        fx.name = name.to_string();
        return Ok(fx);
    }
    match name {
        "lambda-one" => lambda_one_fixture(f),
        "split" => {
            let algebra = split_fixture(f)?;
            let c = algebra.add(&algebra.basis_element(0), &algebra.basis_element(1))?;
            Ok(Fixture { name: name.to_string(), algebra, elements: vec![("c".into(), c)] })
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axis::{verify_axis, AxisError, NotAxisReason};

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn spin_with_empty_v_is_the_field() {
        let alg = spin_factor(&SpinFactorSpec { field: q(), b: Matrix::zeros(q(), 0, 0) }).unwrap();
        assert_eq!(alg.dim(), 1);
        let e = alg.basis_element(0);
        assert_eq!(alg.multiply(&e, &e).unwrap(), e);
    }

    #[test]
    fn spin_with_degenerate_b() {
        let mut b = Matrix::zeros(q(), 2, 2);
        b.set(0, 0, q().one());
        let alg = spin_factor(&SpinFactorSpec { field: q(), b }).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.radical().dim(), 1);
    }

    #[test]
    fn asymmetric_b_rejected() {
        let mut b = Matrix::zeros(q(), 2, 2);
        b.set(0, 1, q().one());
        assert_eq!(
            spin_factor(&SpinFactorSpec { field: q(), b }).unwrap_err(),
            ConstructionError::InvalidBilinearForm
        );
    }

    #[test]
    fn lambda_values_realized() {
        for text in ["0", "1/2", "1/4", "1/3", "2/5", "-1", "3", "1"] {
            let lambda = q().parse(text).unwrap();
            let fx = axis_pair_with_lambda(q(), &lambda).unwrap();
            let (a, b) = (fx.element("a").unwrap(), fx.element("b").unwrap());
            assert_eq!(fx.algebra.form(a, b).unwrap(), lambda, "lambda {text}");
            verify_axis(&fx.algebra, a).unwrap();
            verify_axis(&fx.algebra, b).unwrap();
        }
    }

    #[test]
    fn lambda_one_shape() {
        let fx = lambda_one_fixture(q()).unwrap();
        let alg = &fx.algebra;
        let cert = verify_axis(alg, fx.element("a").unwrap()).unwrap();
        let d = cert.decompose(fx.element("b").unwrap()).unwrap();
        assert_eq!(d.alpha, q().one());
        assert!(alg.is_zero(&d.x0));
        assert_eq!(d.xhalf, alg.scale(&q().half(), &alg.basis_element(2)).unwrap());
        let rad = alg.radical();
        assert_eq!(rad.dim(), 1);
        assert!(alg.in_span(&rad, &d.xhalf));
    }

    #[test]
    fn matsuo_s3_and_s4() {
        let s3 = named_fixture("matsuo:S3", None).unwrap();
        assert_eq!(s3.algebra.dim(), 3);
        let quarter = q().parse("1/4").unwrap();
        for i in 0..3 {
            verify_axis(&s3.algebra, &s3.algebra.basis_element(i)).unwrap();
        }
        assert_eq!(
            s3.algebra.form(&s3.algebra.basis_element(0), &s3.algebra.basis_element(1)).unwrap(),
            quarter
        );
        let s4 = named_fixture("matsuo:S4", None).unwrap();
        let alg = &s4.algebra;
        assert_eq!(alg.dim(), 6);
        assert_eq!(alg.radical().dim(), 0);
        assert_eq!(alg.form(&alg.basis_element(0), &alg.basis_element(5)).unwrap(), q().zero());
        for i in 0..6 {
            // two lines through each point, each contributing y - z to A1/2
            let cert = verify_axis(alg, &alg.basis_element(i)).unwrap();
            assert_eq!(cert.dims(), (1, 3, 2));
        }
    }

    #[test]
    fn matsuo_without_lines_is_direct_sum() {
        let alg = matsuo_algebra(q(), &MatsuoSpec { points: 3, lines: vec![] }).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { q().one() } else { q().zero() };
                assert_eq!(alg.form(&alg.basis_element(i), &alg.basis_element(j)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn bad_lines_rejected() {
        let twice = MatsuoSpec { points: 4, lines: vec![[0, 1, 2], [0, 1, 3]] };
        assert!(matches!(matsuo_algebra(q(), &twice), Err(ConstructionError::InvalidLineStructure(_))));
        let repeat = MatsuoSpec { points: 3, lines: vec![[0, 0, 1]] };
        assert!(matches!(matsuo_algebra(q(), &repeat), Err(ConstructionError::InvalidLineStructure(_))));
    }

    #[test]
    fn split_idempotents() {
        let fx = named_fixture("split", None).unwrap();
        let alg = &fx.algebra;
        let c = fx.element("c").unwrap();
        assert_eq!(&alg.multiply(c, c).unwrap(), c);
        assert_eq!(alg.form(c, c).unwrap(), q().from_i64(2));
        assert!(matches!(verify_axis(alg, c), Err(AxisError::NotAnAxis(NotAxisReason::Spectrum { .. }))));
    }

    #[test]
    fn symmetric_matrices_give_lambda_one_with_nonzero_b0() {
        let gf5 = FieldSpec::prime(5).unwrap();
        let fx = named_fixture("sym:1,1,2", Some(gf5)).unwrap();
        let alg = &fx.algebra;
        assert_eq!(alg.dim(), 6);
        let (a, b) = (fx.element("a").unwrap(), fx.element("b").unwrap());
        assert_eq!(alg.form(a, b).unwrap(), gf5.one());
        let ca = verify_axis(alg, a).unwrap();
        verify_axis(alg, b).unwrap();
        assert_eq!(ca.dims(), (1, 3, 2));
        assert!(!alg.is_zero(&ca.decompose(b).unwrap().x0));
        assert!(matches!(named_fixture("sym:1,1", None), Err(ConstructionError::NotUnitVector)));
    }

    #[test]
    fn field_override() {
        let gf5 = FieldSpec::prime(5).unwrap();
        let fx = named_fixture("spin:1/3", Some(gf5)).unwrap();
        assert_eq!(fx.algebra.field(), gf5);
        let gf3 = FieldSpec::prime(3).unwrap();
        assert!(matches!(
            named_fixture("spin:1/3", Some(gf3)),
            Err(ConstructionError::Scalar(ScalarError::NonInvertibleDenominator { .. }))
        ));
        assert!(named_fixture("matsuo:S4", Some(gf3)).is_ok());
        assert!(matches!(named_fixture("torus", None), Err(ConstructionError::UnknownFixture(_))));
        assert!(matches!(named_fixture("matsuo:S9", None), Err(ConstructionError::UnknownFixture(_))));
    }
}
