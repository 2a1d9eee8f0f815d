//! Axes of Jordan type 1/2: certification, eigenspace decomposition,
//! fusion rules and the Miyamoto involution.

use std::fmt;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Element, Subspace};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FusionClause {
    /// A0 A0 ⊆ A0
    ZeroZero,
    /// A0 A1/2 ⊆ A1/2
    ZeroHalf,
    /// A1/2 A1/2 ⊆ Fc + A0
    HalfHalf,
}

impl fmt::Display for FusionClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FusionClause::ZeroZero => "A0*A0 in A0",
            FusionClause::ZeroHalf => "A0*A1/2 in A1/2",
            FusionClause::HalfHalf => "A1/2*A1/2 in Fc+A0",
        })
    }
}

/// The first clause of the axis definition that an element violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotAxisReason {
    NotIdempotent {
        defect: Element,
    },
    /// The 1-eigenspace is not spanned by c.
    Spectrum {
        one_dim: usize,
    },
    /// A0 and A1/2 together with Fc do not span the algebra.
    NotSpanning {
        zero_dim: usize,
        half_dim: usize,
        dim: usize,
    },
    FormNotOne {
        value: Scalar,
    },
    /// Eigenbasis vectors `i` and `j` (indices within their eigenspaces)
    /// whose product breaks the clause.
    Fusion {
        clause: FusionClause,
        i: usize,
        j: usize,
        product: Element,
    },
}

impl NotAxisReason {
    pub fn clause(&self) -> &'static str {
        match self {
            NotAxisReason::NotIdempotent { .. } => "not idempotent",
            NotAxisReason::Spectrum { .. } => "spectrum",
            NotAxisReason::NotSpanning { .. } => "not a direct sum",
            NotAxisReason::FormNotOne { .. } => "form not one",
            NotAxisReason::Fusion { .. } => "fusion",
        }
    }
}

impl fmt::Display for NotAxisReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotAxisReason::NotIdempotent { defect } => {
                write!(f, "not idempotent: c*c - c = {defect}")
            }
            NotAxisReason::Spectrum { one_dim } => {
                write!(f, "spectrum: 1-eigenspace has dimension {one_dim}, expected 1")
            }
            NotAxisReason::NotSpanning { zero_dim, half_dim, dim } => {
                write!(f, "not a direct sum: 1 + {zero_dim} + {half_dim} != {dim}")
            }
            NotAxisReason::FormNotOne { value } => write!(f, "form not one: (c,c) = {value}"),
            NotAxisReason::Fusion { clause, i, j, product } => {
                write!(f, "fusion: {clause} fails for basis pair ({i}, {j}), product {product}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxisError {
    #[error("not an axis ({0})")]
    NotAnAxis(NotAxisReason),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("(c,c) = {0}, expected 1")]
    FormNotOne(Scalar),
    #[error("y is not in Fa + A0(a)")]
    YNotInZeroPart,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A verified axis together with bases of its 0- and 1/2-eigenspaces.
#[derive(Debug, Clone)]
pub struct AxisCertificate<'a> {
    algebra: &'a Algebra,
    axis: Element,
    zero: Subspace,
    half: Subspace,
}

/// `x = alpha a + x0 + xhalf` with respect to an axis `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub alpha: Scalar,
    pub x0: Element,
    pub xhalf: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Part {
    Axis,
    Zero,
    Half,
}

#[derive(Debug, Clone)]
pub struct OrthogonalityViolation {
    pub left: (Part, usize),
    pub right: (Part, usize),
    pub value: Scalar,
}

#[derive(Debug, Clone)]
pub struct OrthogonalityReport {
    pub pairs_checked: usize,
    pub violations: Vec<OrthogonalityViolation>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `Q_c(x) = c(cx) - 1/2 (cx + (c,x) c)`.
pub fn q_c(alg: &Algebra, c: &Element, x: &Element) -> Result<Element, AlgebraError> {
    alg.multiply(c, x)?;
    Ok(alg.wrap(q_raw(alg, c.coords(), x.coords())))
}

fn q_raw(alg: &Algebra, c: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
    let f = alg.field();
    let cx = alg.mul_raw(c, x);
    let ccx = alg.mul_raw(c, &cx);
    let inner = alg.add_raw(&cx, &alg.scale_raw(&alg.form_raw(c, x), c));
    alg.sub_raw(&ccx, &alg.scale_raw(&f.half(), &inner))
}

/// `P_c(x,y) = 4(cx)(cy) - (c,y)cx - (cy)x - (c,x)cy - (cx)y - (c,xy)c + c(xy)`.
pub fn p_c(alg: &Algebra, c: &Element, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
    alg.multiply(c, x)?;
    alg.multiply(c, y)?;
    Ok(alg.wrap(p_raw(alg, c.coords(), x.coords(), y.coords())))
}

fn p_raw(alg: &Algebra, c: &[Scalar], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let f = alg.field();
    let cx = alg.mul_raw(c, x);
    let cy = alg.mul_raw(c, y);
    let xy = alg.mul_raw(x, y);
    let mut out = alg.scale_raw(&f.from_i64(4), &alg.mul_raw(&cx, &cy));
    let minus = [
        alg.scale_raw(&alg.form_raw(c, y), &cx),
        alg.mul_raw(&cy, x),
        alg.scale_raw(&alg.form_raw(c, x), &cy),
        alg.mul_raw(&cx, y),
        alg.scale_raw(&alg.form_raw(c, &xy), c),
    ];
    for m in &minus {
        out = alg.sub_raw(&out, m);
    }
    alg.add_raw(&out, &alg.mul_raw(c, &xy))
}

/// `A_lambda(z) = {x : zx = lambda x}`.
pub fn eigenspace(alg: &Algebra, z: &Element, lambda: &Scalar) -> Result<Subspace, AlgebraError> {
    if !alg.owns(z) {
        return Err(AlgebraError::AlgebraMismatch);
    }
    eigenspace_raw(alg, z.coords(), lambda)
}

fn eigenspace_raw(alg: &Algebra, z: &[Scalar], lambda: &Scalar) -> Result<Subspace, AlgebraError> {
    let f = alg.field();
    let shifted = alg.left_mul_raw(z).sub(&Matrix::identity(f, alg.dim()).scale(lambda));
    alg.nullspace(&shifted)
}

fn idempotent_defect(alg: &Algebra, c: &Element) -> Result<Vec<Scalar>, AlgebraError> {
    if !alg.owns(c) {
        return Err(AlgebraError::AlgebraMismatch);
    }
    Ok(alg.sub_raw(&alg.mul_raw(c.coords(), c.coords()), c.coords()))
}

/// Certifies `c` as a primitive axis of Jordan type 1/2 by computing its
/// eigenspaces and checking every fusion rule on eigenbasis pairs.
///
/// Clauses are checked in the order: idempotence, 1-eigenspace equal to Fc,
/// spanning, `(c,c) = 1`, fusion.
pub fn verify_axis<'a>(alg: &'a Algebra, c: &Element) -> Result<AxisCertificate<'a>, AxisError> {
    let f = alg.field();
    let defect = idempotent_defect(alg, c)?;
    if !alg.is_zero_raw(&defect) {
        return Err(AxisError::NotAnAxis(NotAxisReason::NotIdempotent { defect: alg.wrap(defect) }));
    }
    let one = eigenspace_raw(alg, c.coords(), &f.one())?;
    if one.dim() != 1 {
        return Err(AxisError::NotAnAxis(NotAxisReason::Spectrum { one_dim: one.dim() }));
    }
    let zero = eigenspace_raw(alg, c.coords(), &f.zero())?;
    let half = eigenspace_raw(alg, c.coords(), &f.half())?;
    if 1 + zero.dim() + half.dim() != alg.dim() {
        return Err(AxisError::NotAnAxis(NotAxisReason::NotSpanning {
            zero_dim: zero.dim(),
            half_dim: half.dim(),
            dim: alg.dim(),
        }));
    }
    let cc = alg.form_raw(c.coords(), c.coords());
    if cc != f.one() {
        return Err(AxisError::NotAnAxis(NotAxisReason::FormNotOne { value: cc }));
    }
    let cert = AxisCertificate { algebra: alg, axis: c.clone(), zero, half };
    cert.check_fusion()?;
    Ok(cert)
}

/// Axis test through `Q_c(e_i) = 0` for every basis vector and `(c,c) = 1`.
pub fn verify_axis_via_q(alg: &Algebra, c: &Element) -> Result<bool, AxisError> {
    if !alg.is_zero_raw(&idempotent_defect(alg, c)?) {
        return Err(AxisError::NotIdempotent);
    }
    if alg.form_raw(c.coords(), c.coords()) != alg.field().one() {
        return Ok(false);
    }
    Ok((0..alg.dim()).all(|i| alg.is_zero_raw(&q_raw(alg, c.coords(), &alg.unit(i)))))
}

/// Axis test through `P_c(e_i, e_j) = 0` for all basis pairs; requires `(c,c) = 1`.
pub fn verify_axis_via_p(alg: &Algebra, c: &Element) -> Result<bool, AxisError> {
    if !alg.is_zero_raw(&idempotent_defect(alg, c)?) {
        return Err(AxisError::NotIdempotent);
    }
    let cc = alg.form_raw(c.coords(), c.coords());
    if cc != alg.field().one() {
        return Err(AxisError::FormNotOne(cc));
    }
    let n = alg.dim();
    for i in 0..n {
        for j in i..n {
            if !alg.is_zero_raw(&p_raw(alg, c.coords(), &alg.unit(i), &alg.unit(j))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl<'a> AxisCertificate<'a> {
    fn check_fusion(&self) -> Result<(), AxisError> {
        let alg = self.algebra;
        let fail = |clause, i, j, product: Vec<Scalar>| {
            Err(AxisError::NotAnAxis(NotAxisReason::Fusion { clause, i, j, product: alg.wrap(product) }))
        };
        let zero = self.zero.basis();
        let half = self.half.basis();
        for (i, x) in zero.iter().enumerate() {
            for (j, y) in zero.iter().enumerate().skip(i) {
                let p = alg.mul_raw(x.coords(), y.coords());
                if !alg.is_zero_raw(&alg.mul_raw(self.axis.coords(), &p)) {
                    return fail(FusionClause::ZeroZero, i, j, p);
                }
            }
        }
        let h = alg.field().half();
        for (i, x) in zero.iter().enumerate() {
            for (j, y) in half.iter().enumerate() {
                let p = alg.mul_raw(x.coords(), y.coords());
                let ap = alg.mul_raw(self.axis.coords(), &p);
                if ap != alg.scale_raw(&h, &p) {
                    return fail(FusionClause::ZeroHalf, i, j, p);
                }
            }
        }
        for (i, x) in half.iter().enumerate() {
            for (j, y) in half.iter().enumerate().skip(i) {
                let p = alg.mul_raw(x.coords(), y.coords());
                if !alg.is_zero_raw(&self.decompose_raw(&p).2) {
                    return fail(FusionClause::HalfHalf, i, j, p);
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.algebra
    }

    pub fn axis(&self) -> &Element {
        &self.axis
    }

    pub fn zero_space(&self) -> &Subspace {
        &self.zero
    }

    pub fn half_space(&self) -> &Subspace {
        &self.half
    }

    /// Dimensions of (Fc, A0, A1/2).
    pub fn dims(&self) -> (usize, usize, usize) {
        (1, self.zero.dim(), self.half.dim())
    }

    /// Closed-form projections `x0 = x - 2ax + (a,x)a`, `xhalf = 2ax - 2(a,x)a`.
    pub fn decompose(&self, x: &Element) -> Result<Decomposition, AxisError> {
        if !self.algebra.owns(x) {
            return Err(AlgebraError::AlgebraMismatch.into());
        }
        let (alpha, x0, xh) = self.decompose_raw(x.coords());
        Ok(Decomposition { alpha, x0: self.algebra.wrap(x0), xhalf: self.algebra.wrap(xh) })
    }

    pub(crate) fn decompose_raw(&self, x: &[Scalar]) -> (Scalar, Vec<Scalar>, Vec<Scalar>) {
        let alg = self.algebra;
        let f = alg.field();
        let a = self.axis.coords();
        let alpha = alg.form_raw(a, x);
        let ax2 = alg.scale_raw(&f.from_i64(2), &alg.mul_raw(a, x));
        let alpha_a = alg.scale_raw(&alpha, a);
        let x0 = alg.add_raw(&alg.sub_raw(x, &ax2), &alpha_a);
        let xh = alg.sub_raw(&ax2, &alg.scale_raw(&f.from_i64(2), &alpha_a));
        (alpha, x0, xh)
    }

    /// Reassembles `alpha a + x0 + xhalf`.
    pub fn reconstruct(&self, d: &Decomposition) -> Element {
        let alg = self.algebra;
        let v = alg.add_raw(
            &alg.add_raw(&alg.scale_raw(&d.alpha, self.axis.coords()), d.x0.coords()),
            d.xhalf.coords(),
        );
        alg.wrap(v)
    }

    /// The Miyamoto involution `x -> (a,x)a + x0 - xhalf`, i.e. `x - 2 xhalf`.
    pub fn miyamoto(&self) -> Matrix {
        let alg = self.algebra;
        let f = alg.field();
        let cols: Vec<Vec<Scalar>> = (0..alg.dim())
            .map(|j| {
                let e = alg.unit(j);
                let (_, _, xh) = self.decompose_raw(&e);
                alg.sub_raw(&e, &alg.scale_raw(&f.from_i64(2), &xh))
            })
            .collect();
        Matrix::from_columns(f, alg.dim(), &cols)
    }

    /// Residual `a(xy) - (ax)y`, defined for `y` in `Fa + A0(a)`.
    pub fn check_seress(&self, x: &Element, y: &Element) -> Result<Element, AxisError> {
        let alg = self.algebra;
        if !alg.owns(x) || !alg.owns(y) {
            return Err(AlgebraError::AlgebraMismatch.into());
        }
        if !alg.is_zero_raw(&self.decompose_raw(y.coords()).2) {
            return Err(AxisError::YNotInZeroPart);
        }
        let a = self.axis.coords();
        let lhs = alg.mul_raw(a, &alg.mul_raw(x.coords(), y.coords()));
        let rhs = alg.mul_raw(&alg.mul_raw(a, x.coords()), y.coords());
        Ok(alg.wrap(alg.sub_raw(&lhs, &rhs)))
    }

    /// Forms between basis vectors of distinct parts among `Fa`, `A0`, `A1/2`.
    pub fn check_orthogonality(&self) -> OrthogonalityReport {
        let alg = self.algebra;
        let f = alg.field();
        let parts: [(Part, Vec<&Element>); 3] = [
            (Part::Axis, vec![&self.axis]),
            (Part::Zero, self.zero.basis().iter().collect()),
            (Part::Half, self.half.basis().iter().collect()),
        ];
        let mut violations = Vec::new();
        let mut pairs_checked = 0;
        for p in 0..3 {
            for q in p + 1..3 {
                for (i, x) in parts[p].1.iter().enumerate() {
                    for (j, y) in parts[q].1.iter().enumerate() {
                        pairs_checked += 1;
                        let value = alg.form_raw(x.coords(), y.coords());
                        if !f.is_zero(&value) {
                            violations.push(OrthogonalityViolation {
                                left: (parts[p].0.clone(), i),
                                right: (parts[q].0.clone(), j),
                                value,
                            });
                        }
                    }
                }
            }
        }
        OrthogonalityReport { pairs_checked, violations }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    /// Spin factor F1 + V with B = I on V of dimension m.
    fn spin(m: usize) -> Algebra {
        let f = q();
        let mut products = vec![(0, 0, 0, f.one())];
        for i in 1..=m {
            products.push((0, i, i, f.one()));
            products.push((i, i, 0, f.one()));
        }
        Algebra::from_products(f, m + 1, products, Matrix::identity(f, m + 1).scale(&f.from_i64(2))).unwrap()
    }

    fn split() -> Algebra {
        let f = q();
        Algebra::from_products(f, 2, [(0, 0, 0, f.one()), (1, 1, 1, f.one())], Matrix::identity(f, 2))
            .unwrap()
    }

    fn el(alg: &Algebra, v: &[&str]) -> Element {
        alg.element(v.iter().map(|s| alg.field().parse(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn spin_axis_certificate() {
        let alg = spin(2);
        let a = el(&alg, &["1/2", "1/2", "0"]);
        let cert = verify_axis(&alg, &a).unwrap();
        assert_eq!(cert.dims(), (1, 1, 1));
        assert!(alg.in_span(cert.zero_space(), &el(&alg, &["1", "-1", "0"])));
        assert!(alg.in_span(cert.half_space(), &el(&alg, &["0", "0", "1"])));
        assert!(verify_axis_via_q(&alg, &a).unwrap());
        assert!(verify_axis_via_p(&alg, &a).unwrap());
        let big = spin(4);
        let a4 = el(&big, &["1/2", "1/2", "0", "0", "0"]);
        assert_eq!(verify_axis(&big, &a4).unwrap().dims(), (1, 1, 3));
    }

    #[test]
    fn split_identity_is_not_an_axis() {
        let alg = split();
        let c = el(&alg, &["1", "1"]);
        let err = verify_axis(&alg, &c).unwrap_err();
        assert!(matches!(err, AxisError::NotAnAxis(NotAxisReason::Spectrum { one_dim: 2 })));
        assert!(!verify_axis_via_q(&alg, &c).unwrap());
        assert!(!alg.is_zero(&q_c(&alg, &c, &alg.basis_element(0)).unwrap()));
        assert!(matches!(verify_axis_via_p(&alg, &c), Err(AxisError::FormNotOne(_))));
        let e0 = alg.basis_element(0);
        let cert = verify_axis(&alg, &e0).unwrap();
        assert_eq!(cert.dims(), (1, 1, 0));
        assert!(alg.in_span(cert.zero_space(), &alg.basis_element(1)));
    }

    #[test]
    fn q_and_p_on_axis() {
        let alg = spin(2);
        let a = el(&alg, &["1/2", "1/2", "0"]);
        let v = alg.basis_element(2);
        assert!(alg.is_zero(&q_c(&alg, &a, &a).unwrap()));
        assert!(alg.is_zero(&q_c(&alg, &a, &v).unwrap()));
        // P_c(c,c) = 3c - 3(c,c)c
        let one = alg.basis_element(0);
        let pcc = p_c(&alg, &one, &one, &one).unwrap();
        let cc = alg.form(&one, &one).unwrap();
        let expected = alg
            .sub(
                &alg.scale(&q().from_i64(3), &one).unwrap(),
                &alg.scale(&q().mul(&q().from_i64(3), &cc), &one).unwrap(),
            )
            .unwrap();
        assert_eq!(pcc, expected);
    }

    #[test]
    fn non_idempotent_reports() {
        let alg = spin(2);
        let x = el(&alg, &["1", "1", "0"]);
        assert!(matches!(
            verify_axis(&alg, &x),
            Err(AxisError::NotAnAxis(NotAxisReason::NotIdempotent { .. }))
        ));
        assert_eq!(verify_axis_via_q(&alg, &x), Err(AxisError::NotIdempotent));
        assert_eq!(verify_axis_via_p(&alg, &x), Err(AxisError::NotIdempotent));
    }

    #[test]
    fn form_not_one_after_spectrum() {
        // rescaled form: spectrum is right but (c,c) = 2
        let f = q();
        let alg = Algebra::from_products(
            f,
            3,
            [
                (0, 0, 0, f.one()),
                (0, 1, 1, f.one()),
                (0, 2, 2, f.one()),
                (1, 1, 0, f.one()),
                (2, 2, 0, f.one()),
            ],
            Matrix::identity(f, 3).scale(&f.from_i64(4)),
        )
        .unwrap();
        let a = el(&alg, &["1/2", "1/2", "0"]);
        assert!(matches!(verify_axis(&alg, &a), Err(AxisError::NotAnAxis(NotAxisReason::FormNotOne { .. }))));
        assert!(!verify_axis_via_q(&alg, &a).unwrap());
    }

    #[test]
    fn decomposition_closed_forms() {
        let alg = spin(2);
        let a = el(&alg, &["1/2", "1/2", "0"]);
        let b = el(&alg, &["1/2", "0", "1/2"]);
        let cert = verify_axis(&alg, &a).unwrap();
        let d = cert.decompose(&b).unwrap();
        assert_eq!(d.alpha, q().half());
        assert_eq!(d.x0, el(&alg, &["1/4", "-1/4", "0"]));
        assert_eq!(d.xhalf, el(&alg, &["0", "0", "1/2"]));
        assert_eq!(cert.reconstruct(&d), b);
        let da = cert.decompose(&a).unwrap();
        assert_eq!((da.alpha, da.x0, da.xhalf), (q().one(), alg.zero(), alg.zero()));
    }

    #[test]
    fn miyamoto_on_spin_factor() {
        let alg = spin(2);
        let cert = verify_axis(&alg, &el(&alg, &["1/2", "1/2", "0"])).unwrap();
        let t = cert.miyamoto();
        let f = q();
        let mut expected = Matrix::identity(f, 3);
        expected.set(2, 2, f.from_i64(-1));
        assert_eq!(t, expected);
        assert_eq!(t.mul(&t), Matrix::identity(f, 3));
        assert!(alg.is_automorphism(&t).unwrap().passed());
    }

    #[test]
    fn seress_cases() {
        let alg = spin(2);
        let a = el(&alg, &["1/2", "1/2", "0"]);
        let cert = verify_axis(&alg, &a).unwrap();
        let v = alg.basis_element(2);
        let y0 = el(&alg, &["1", "-1", "0"]);
        assert!(alg.is_zero(&cert.check_seress(&v, &y0).unwrap()));
        assert!(alg.is_zero(&cert.check_seress(&v, &a).unwrap()));
        assert_eq!(cert.check_seress(&y0, &v), Err(AxisError::YNotInZeroPart));
    }

    #[test]
    fn orthogonality_on_spin_factor() {
        let alg = spin(3);
        let cert = verify_axis(&alg, &el(&alg, &["1/2", "0", "1/2", "0"])).unwrap();
        let r = cert.check_orthogonality();
        assert!(r.passed());
        assert_eq!(r.pairs_checked, 1 + 2 + 2);
    }

    #[test]
    fn eigenspace_of_zero() {
        let alg = spin(2);
        assert_eq!(eigenspace(&alg, &alg.zero(), &q().zero()).unwrap().dim(), 3);
        let a = el(&alg, &["1/2", "1/2", "0"]);
        assert_eq!(eigenspace(&alg, &a, &q().one()).unwrap().dim(), 1);
    }
}
