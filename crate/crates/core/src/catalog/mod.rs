//! Registry of identities between `a`, `b` and eigenvectors of `a`, and a
//! runner that checks them exhaustively over eigenbases of an axis pair.

mod entries;
mod expr;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Element};
use crate::axis::{p_c, q_c, verify_axis, AxisCertificate, AxisError, Decomposition};
use crate::parallel::{map_ordered, Execution};
use crate::scalar::{FieldSpec, Scalar};

pub use entries::CATALOG;
pub use expr::SyntaxError;
use expr::{Equation, EvalError, Value, Var};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("axis pair sanity check failed: {0}")]
    SanityFailed(String),
    #[error("expected {expected} inputs, got {found}")]
    SlotCount { expected: usize, found: usize },
    #[error("input {index} does not lie in the {slot} slot")]
    SlotMismatch { index: usize, slot: Slot },
    #[error("identity {id}: {reason}")]
    Malformed { id: String, reason: String },
    #[error(transparent)]
    Axis(#[from] AxisError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which basis a slot ranges over. Eigenspaces are those of `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    /// `x0` in `A0(a)`.
    X0,
    /// `xh` in `A1/2(a)`.
    XHalf,
    Y0,
    YHalf,
    /// `x` in `A`, with `x0`, `xh` its components.
    X,
    Y,
    /// `v` in `A1/2(a)`.
    V,
    /// `y` in `Fa + A0(a)`.
    YA0,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Slot::X0 => "X0",
            Slot::XHalf => "XHALF",
            Slot::Y0 => "Y0",
            Slot::YHalf => "YHALF",
            Slot::X => "X",
            Slot::Y => "Y",
            Slot::V => "V",
            Slot::YA0 => "YA0",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    Mandatory,
    Extended,
}

/// Hypotheses on `λ = (a,b)`, the characteristic and `b0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypotheses {
    pub lambda_not: &'static [&'static str],
    pub lambda_one: bool,
    pub char_not_3: bool,
    pub b0_zero: bool,
}

impl Hypotheses {
    pub const NONE: Hypotheses =
        Hypotheses { lambda_not: &[], lambda_one: false, char_not_3: false, b0_zero: false };

    pub fn holds(&self, pair: &AxisPair<'_>) -> bool {
        let f = pair.field();
        for text in self.lambda_not {
            if f.parse(text).is_ok_and(|v| v == pair.lambda) {
                return false;
            }
        }
        if self.lambda_one && pair.lambda != f.one() {
            return false;
        }
        if self.char_not_3 && f.characteristic() == 3 {
            return false;
        }
        if self.b0_zero && !pair.algebra.is_zero(&pair.b_decomp.x0) {
            return false;
        }
        true
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if !self.lambda_not.is_empty() {
            parts.push(format!("λ ∉ {{{}}}", self.lambda_not.join(", ")));
        }
        if self.lambda_one {
            parts.push("λ = 1".to_string());
        }
        if self.char_not_3 {
            parts.push("char ≠ 3".to_string());
        }
        if self.b0_zero {
            parts.push("b0 = 0".to_string());
        }
        if parts.is_empty() {
            "none".to_string()
        } else {
            parts.join(", ")
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub family: &'static str,
    pub tier: Tier,
    pub slots: &'static [Slot],
    pub hypotheses: Hypotheses,
    /// The identity in the catalog expression language.
    pub text: &'static str,
}

pub fn list_identities() -> &'static [IdentityDescriptor] {
    CATALOG
}

pub fn find_identity(id: &str) -> Option<(usize, &'static IdentityDescriptor)> {
    CATALOG.iter().enumerate().find(|(_, d)| d.id == id)
}

fn parsed() -> &'static [Result<Vec<Equation>, SyntaxError>] {
    static PARSED: OnceLock<Vec<Result<Vec<Equation>, SyntaxError>>> = OnceLock::new();
    PARSED.get_or_init(|| CATALOG.iter().map(|d| expr::parse(d.text)).collect())
}

/// Two axes `a`, `b` with `b = λa + b0 + bh` relative to `a`.
#[derive(Debug, Clone)]
pub struct AxisPair<'a> {
    pub algebra: &'a Algebra,
    pub cert_a: AxisCertificate<'a>,
    pub cert_b: AxisCertificate<'a>,
    pub lambda: Scalar,
    pub b_decomp: Decomposition,
}

impl<'a> AxisPair<'a> {
    /// Certifies both axes and checks the basic relations between `b0`,
    /// `bh` and `λ`.
    pub fn new(algebra: &'a Algebra, a: &Element, b: &Element) -> Result<Self, CatalogError> {
        let cert_a = verify_axis(algebra, a)?;
        let cert_b = verify_axis(algebra, b)?;
        let lambda = algebra.form(a, b)?;
        let b_decomp = cert_a.decompose(b)?;
        let pair = AxisPair { algebra, cert_a, cert_b, lambda, b_decomp };
        pair.sanity()?;
        Ok(pair)
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn a(&self) -> &Element {
        self.cert_a.axis()
    }

    pub fn b(&self) -> &Element {
        self.cert_b.axis()
    }

    pub fn b0(&self) -> &Element {
        &self.b_decomp.x0
    }

    pub fn bhalf(&self) -> &Element {
        &self.b_decomp.xhalf
    }

    fn sanity(&self) -> Result<(), CatalogError> {
        let base = self.context();
        for id in ["Q.3a", "Q.3b", "Q.3c", "Q.3d", "Q.3e"] {
            let (idx, desc) = find_identity(id).expect("sanity identities are catalogued");
            let eqs = equations(idx)?;
            let residuals = evaluate_equations(desc, eqs, &base)?;
            if let Some((k, r)) = residuals.iter().enumerate().find(|(_, r)| !r.is_zero(self.algebra)) {
                return Err(CatalogError::SanityFailed(format!("{id} equation {k}: residual {r}")));
            }
        }
        Ok(())
    }

    fn context(&self) -> Context<'_> {
        let mut vars: [Option<Vec<Scalar>>; Var::COUNT] = Default::default();
        vars[Var::A.index()] = Some(self.a().coords().to_vec());
        vars[Var::B.index()] = Some(self.b().coords().to_vec());
        vars[Var::B0.index()] = Some(self.b0().coords().to_vec());
        vars[Var::Bh.index()] = Some(self.bhalf().coords().to_vec());
        Context { algebra: self.algebra, cert_a: &self.cert_a, lambda: self.lambda.clone(), vars }
    }

    fn slot_basis(&self, slot: Slot) -> Vec<Vec<Scalar>> {
        let alg = self.algebra;
        match slot {
            Slot::X0 | Slot::Y0 => {
                self.cert_a.zero_space().basis().iter().map(|e| e.coords().to_vec()).collect()
            }
            Slot::XHalf | Slot::YHalf | Slot::V => {
                self.cert_a.half_space().basis().iter().map(|e| e.coords().to_vec()).collect()
            }
            Slot::X | Slot::Y => (0..alg.dim()).map(|i| alg.unit(i)).collect(),
            Slot::YA0 => std::iter::once(self.a().coords().to_vec())
                .chain(self.cert_a.zero_space().basis().iter().map(|e| e.coords().to_vec()))
                .collect(),
        }
    }

    fn slot_contains(&self, slot: Slot, x: &[Scalar]) -> bool {
        let alg = self.algebra;
        let (alpha, x0, xh) = self.cert_a.decompose_raw(x);
        let f = self.field();
        match slot {
            Slot::X | Slot::Y => true,
            Slot::X0 | Slot::Y0 => f.is_zero(&alpha) && alg.is_zero_raw(&xh),
            Slot::XHalf | Slot::YHalf | Slot::V => f.is_zero(&alpha) && alg.is_zero_raw(&x0),
            Slot::YA0 => alg.is_zero_raw(&xh),
        }
    }
}

pub(crate) struct Context<'c> {
    pub(crate) algebra: &'c Algebra,
    pub(crate) cert_a: &'c AxisCertificate<'c>,
    pub(crate) lambda: Scalar,
    vars: [Option<Vec<Scalar>>; Var::COUNT],
}

impl Context<'_> {
    pub(crate) fn var(&self, v: Var) -> Result<&[Scalar], EvalError> {
        self.vars[v.index()].as_deref().ok_or(EvalError::Unbound(v))
    }

    pub(crate) fn a(&self) -> &[Scalar] {
        self.cert_a.axis().coords()
    }

    pub(crate) fn p_a(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let alg = self.algebra;
        p_c(alg, self.cert_a.axis(), &alg.wrap(x.to_vec()), &alg.wrap(y.to_vec()))
            .expect("operands belong to the pair's algebra")
            .into_coords()
    }

    pub(crate) fn q_a(&self, x: &[Scalar]) -> Vec<Scalar> {
        let alg = self.algebra;
        q_c(alg, self.cert_a.axis(), &alg.wrap(x.to_vec()))
            .expect("operands belong to the pair's algebra")
            .into_coords()
    }

    fn bind(&mut self, slot: Slot, x: &[Scalar]) {
        let mut set = |v: Var, value: Vec<Scalar>| self.vars[v.index()] = Some(value);
        match slot {
            Slot::X0 => set(Var::X0, x.to_vec()),
            Slot::XHalf => set(Var::Xh, x.to_vec()),
            Slot::Y0 => set(Var::Y0, x.to_vec()),
            Slot::YHalf => set(Var::Yh, x.to_vec()),
            Slot::V => set(Var::V, x.to_vec()),
            Slot::YA0 => set(Var::Y, x.to_vec()),
            Slot::X | Slot::Y => {
                let (_, x0, xh) = self.cert_a.decompose_raw(x);
                let (full, zero, half) =
                    if slot == Slot::X { (Var::X, Var::X0, Var::Xh) } else { (Var::Y, Var::Y0, Var::Yh) };
                self.vars[full.index()] = Some(x.to_vec());
                self.vars[zero.index()] = Some(x0);
                self.vars[half.index()] = Some(xh);
            }
        }
    }

    fn cloned(&self) -> Self {
        Context {
            algebra: self.algebra,
            cert_a: self.cert_a,
            lambda: self.lambda.clone(),
            vars: self.vars.clone(),
        }
    }
}

/// The difference of two neighbouring sides of an equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residual {
    Scalar(Scalar),
    Element(Element),
}

impl Residual {
    pub fn is_zero(&self, alg: &Algebra) -> bool {
        match self {
            Residual::Scalar(s) => alg.field().is_zero(s),
            Residual::Element(e) => alg.is_zero(e),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Scalar(s) => write!(f, "{s}"),
            Residual::Element(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    /// `(slot, index into that slot's basis)` for each slot.
    pub inputs: Vec<(Slot, usize)>,
    /// Which `=` of the identity failed, counting across `;`-separated equations.
    pub equation: usize,
    pub residual: Residual,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: &'static str,
    pub applicable: bool,
    pub checked_tuples: usize,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.applicable && self.failures.is_empty()
    }

    /// `<id>\t<APPLICABLE|SKIPPED>\t<PASS|FAIL>\t<tuples>\t<failures>`.
    pub fn tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.id,
            if self.applicable { "APPLICABLE" } else { "SKIPPED" },
            if self.failures.is_empty() { "PASS" } else { "FAIL" },
            self.checked_tuples,
            self.failures.len()
        )
    }
}

pub fn format_report(reports: &[IdentityReport]) -> String {
    reports.iter().map(|r| r.tsv_line() + "\n").collect()
}

fn equations(idx: usize) -> Result<&'static [Equation], CatalogError> {
    parsed()[idx]
        .as_deref()
        .map_err(|e| CatalogError::Malformed { id: CATALOG[idx].id.to_string(), reason: e.to_string() })
}

fn evaluate_equations(
    desc: &IdentityDescriptor,
    eqs: &[Equation],
    ctx: &Context<'_>,
) -> Result<Vec<Residual>, CatalogError> {
    let malformed = |e: EvalError| CatalogError::Malformed { id: desc.id.to_string(), reason: e.to_string() };
    let alg = ctx.algebra;
    let mut out = Vec::new();
    for eq in eqs {
        let values =
            eq.iter().map(|side| side.eval(ctx)).collect::<Result<Vec<_>, _>>().map_err(malformed)?;
        for pair in values.windows(2) {
            let r = expr::difference(ctx, pair[0].clone(), pair[1].clone()).map_err(malformed)?;
            out.push(match r {
                Value::Scalar(s) => Residual::Scalar(s),
                Value::Element(e) => Residual::Element(alg.wrap(e)),
            });
        }
    }
    Ok(out)
}

/// Runs `idx` over every tuple of slot basis vectors, ignoring hypotheses.
fn exhaust(pair: &AxisPair<'_>, idx: usize) -> Result<(usize, Vec<IdentityFailure>), CatalogError> {
    let desc = &CATALOG[idx];
    let eqs = equations(idx)?;
    let bases: Vec<Vec<Vec<Scalar>>> = desc.slots.iter().map(|&s| pair.slot_basis(s)).collect();
    let base = pair.context();
    let mut failures = Vec::new();
    let mut checked = 0;
    if bases.iter().any(|b| b.is_empty()) {
        return Ok((0, failures));
    }
    let mut counter = vec![0usize; bases.len()];
    loop {
        let mut ctx = base.cloned();
        for (k, &slot) in desc.slots.iter().enumerate() {
            ctx.bind(slot, &bases[k][counter[k]]);
        }
        checked += 1;
        for (e, r) in evaluate_equations(desc, eqs, &ctx)?.into_iter().enumerate() {
            if !r.is_zero(pair.algebra) {
                let inputs = desc.slots.iter().copied().zip(counter.iter().copied()).collect();
                failures.push(IdentityFailure { inputs, equation: e, residual: r });
            }
        }
        let mut k = bases.len();
        loop {
            if k == 0 {
                return Ok((checked, failures));
            }
            k -= 1;
            counter[k] += 1;
            if counter[k] < bases[k].len() {
                break;
            }
            counter[k] = 0;
        }
    }
}

fn check_index(pair: &AxisPair<'_>, idx: usize) -> Result<IdentityReport, CatalogError> {
    let desc = &CATALOG[idx];
    if !desc.hypotheses.holds(pair) {
        return Ok(IdentityReport {
            id: desc.id,
            applicable: false,
            checked_tuples: 0,
            failures: Vec::new(),
        });
    }
    let (checked_tuples, failures) = exhaust(pair, idx)?;
    Ok(IdentityReport { id: desc.id, applicable: true, checked_tuples, failures })
}

/// Checks one identity over all tuples of eigenbasis vectors, or marks it
/// skipped when its hypotheses fail for this pair.
pub fn check_identity(pair: &AxisPair<'_>, id: &str) -> Result<IdentityReport, CatalogError> {
    let (idx, _) = find_identity(id).ok_or_else(|| CatalogError::UnknownIdentity(id.to_string()))?;
    check_index(pair, idx)
}

/// Evaluates an identity at arbitrary slot inputs and returns its residuals.
pub fn evaluate_identity(
    pair: &AxisPair<'_>,
    id: &str,
    inputs: &[Element],
) -> Result<Vec<Residual>, CatalogError> {
    let (idx, desc) = find_identity(id).ok_or_else(|| CatalogError::UnknownIdentity(id.to_string()))?;
    if inputs.len() != desc.slots.len() {
        return Err(CatalogError::SlotCount { expected: desc.slots.len(), found: inputs.len() });
    }
    let mut ctx = pair.context();
    for (index, (&slot, x)) in desc.slots.iter().zip(inputs).enumerate() {
        if !pair.algebra.owns(x) {
            return Err(AlgebraError::AlgebraMismatch.into());
        }
        if !pair.slot_contains(slot, x.coords()) {
            return Err(CatalogError::SlotMismatch { index, slot });
        }
        ctx.bind(slot, x.coords());
    }
    evaluate_equations(desc, equations(idx)?, &ctx)
}

/// Reports for every identity of `tier` (the extended tier includes the
/// mandatory one) whose id starts with `filter`, in catalog order.
pub fn run_suite(
    pair: &AxisPair<'_>,
    tier: Tier,
    filter: Option<&str>,
    exec: Execution,
) -> Result<Vec<IdentityReport>, CatalogError> {
    let selected: Vec<usize> = CATALOG
        .iter()
        .enumerate()
        .filter(|(_, d)| d.tier <= tier && filter.is_none_or(|p| d.id.starts_with(p)))
        .map(|(i, _)| i)
        .collect();
    map_ordered(exec, &selected, |&idx| check_index(pair, idx)).into_iter().collect()
}

/// Both sides of the equivalence between `[L_a, L_b]` being a derivation and
/// the three identity shapes on `A0 x A0`, `A1/2 x A0` and `A1/2 x A1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationCriterion {
    pub leibniz: bool,
    pub zero_zero: bool,
    pub half_zero: bool,
    pub half_half: bool,
}

impl DerivationCriterion {
    pub fn conditions(&self) -> bool {
        self.zero_zero && self.half_zero && self.half_half
    }

    pub fn consistent(&self) -> bool {
        self.leibniz == self.conditions()
    }
}

pub fn check_derivation_criterion(pair: &AxisPair<'_>) -> Result<DerivationCriterion, CatalogError> {
    let alg = pair.algebra;
    let d = alg.commutator_leftmul(pair.a(), pair.b())?;
    let leibniz = alg.is_derivation(&d)?.passed();
    let holds = |id: &str| -> Result<bool, CatalogError> {
        let (idx, _) = find_identity(id).expect("criterion shapes are catalogued");
        Ok(exhaust(pair, idx)?.1.is_empty())
    };
    Ok(DerivationCriterion {
        leibniz,
        zero_zero: holds("T0012")?,
        half_zero: holds("T120")?,
        half_half: holds("T121212")?,
    })
}
