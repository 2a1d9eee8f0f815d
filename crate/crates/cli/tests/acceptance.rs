//! One pass/fail line per acceptance criterion; the test fails if any does.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use axial_core::algebra::{Algebra, AlgebraError, Element};
use axial_core::axis::{verify_axis, verify_axis_via_p, verify_axis_via_q, AxisError};
use axial_core::catalog::{check_derivation_criterion, check_identity, run_suite, AxisPair, Tier};
use axial_core::constructions::{axis_pair_with_lambda, lambda_one_fixture, named_fixture, Fixture};
use axial_core::format::{load_algebra, parse_algebra, save_algebra, FormatError};
use axial_core::linalg::Matrix;
use axial_core::parallel::Execution;
use axial_core::scalar::FieldSpec;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

const LAMBDAS: [&str; 7] = ["0", "1/2", "1/4", "1/3", "2/5", "-1", "3"];

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn fixture(name: &str, field: FieldSpec) -> Fixture {
    named_fixture(name, Some(field)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Fixtures with a certified pair `a`, `b`.
fn pair_fixtures() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = LAMBDAS.iter().map(|l| fixture(&format!("spin:{l}"), q())).collect();
    out.push(fixture("lambda-one", q()));
    out.push(fixture("lambda-one", gf(5)));
    out.push(fixture("lambda-one", gf(3)));
    out.push(fixture("matsuo:S3", q()));
    let mut s4 = fixture("matsuo:S4", q());
    let far = s4.algebra.basis_element(5);
    s4.elements[1] = ("b".into(), far);
    out.push(s4);
    out.push(fixture("sym:3/5,4/5,0", q()));
    out.push(fixture("sym:1,1,2", gf(5)));
    out
}

fn pair(fx: &Fixture) -> AxisPair<'_> {
    AxisPair::new(&fx.algebra, fx.element("a").unwrap(), fx.element("b").unwrap())
        .unwrap_or_else(|e| panic!("{}: {e}", fx.name))
}

fn label(fx: &Fixture) -> String {
    format!("{}/{}", fx.name, fx.algebra.field())
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expect_pass(p: &AxisPair<'_>, id: &str, ctx: &str) -> Outcome {
    let r = check_identity(p, id).map_err(|e| e.to_string())?;
    require(r.passed(), || format!("{ctx}: {id} applicable={} failures={}", r.applicable, r.failures.len()))
}

fn expect_skip(p: &AxisPair<'_>, id: &str, ctx: &str) -> Outcome {
    let r = check_identity(p, id).map_err(|e| e.to_string())?;
    require(!r.applicable, || format!("{ctx}: {id} should be skipped"))
}

fn criterion_1() -> Outcome {
    for l in LAMBDAS {
        let lambda = q().parse(l).unwrap();
        let fx = axis_pair_with_lambda(q(), &lambda).map_err(|e| e.to_string())?;
        let (a, b) = (fx.element("a").unwrap(), fx.element("b").unwrap());
        verify_axis(&fx.algebra, a).map_err(|e| format!("λ={l}: a: {e}"))?;
        verify_axis(&fx.algebra, b).map_err(|e| format!("λ={l}: b: {e}"))?;
        let form = fx.algebra.form(a, b).unwrap();
        require(form == lambda, || format!("λ={l}: form(a,b) = {form}"))?;
        let p = AxisPair::new(&fx.algebra, a, b).map_err(|e| format!("λ={l}: {e}"))?;
        for id in ["Q.3a", "Q.3b", "Q.3c", "Q.3d", "Q.3e"] {
            expect_pass(&p, id, &format!("λ={l}"))?;
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for fx in pair_fixtures() {
        let p = pair(&fx);
        let reports =
            run_suite(&p, Tier::Mandatory, Some("SI."), Execution::Parallel).map_err(|e| e.to_string())?;
        require(reports.len() == 8, || format!("{} SI reports", reports.len()))?;
        for r in reports {
            require(r.passed() && r.checked_tuples > 0, || format!("{}: {} failed", label(&fx), r.id))?;
        }
    }
    Ok(())
}

fn lambda_is(p: &AxisPair<'_>, text: &str) -> bool {
    p.field().parse(text).is_ok_and(|v| v == p.lambda)
}

fn criterion_3() -> Outcome {
    let mut skipped = 0;
    for fx in pair_fixtures() {
        let p = pair(&fx);
        if lambda_is(&p, "1/4") {
            expect_skip(&p, "T0012", &label(&fx))?;
            skipped += 1;
        } else {
            expect_pass(&p, "T0012", &label(&fx))?;
        }
    }
    require(skipped >= 2, || "no λ = 1/4 fixture exercised".into())
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for fx in pair_fixtures() {
        let p = pair(&fx);
        if lambda_is(&p, "1/4") || lambda_is(&p, "1") {
            continue;
        }
        expect_pass(&p, "T121212", &label(&fx))?;
        expect_pass(&p, "T120", &label(&fx))?;
        let d = fx.algebra.commutator_leftmul(p.a(), p.b()).unwrap();
        require(fx.algebra.is_derivation(&d).unwrap().passed(), || {
            format!("{}: [L_a,L_b] not a derivation", label(&fx))
        })?;
        checked += 1;
    }
    require(checked >= 6, || format!("only {checked} fixtures"))
}

fn criterion_5() -> Outcome {
    let mut fixtures = pair_fixtures();
    fixtures.push(fixture("matsuo:S5", q()));
    fixtures.push(fixture("sym:1/2,1/2,1/2,1/2", q()));
    fixtures.push(fixture("sym:1,1,1,1", gf(3)));
    for fx in fixtures {
        let p = pair(&fx);
        let c = check_derivation_criterion(&p).map_err(|e| e.to_string())?;
        require(c.consistent(), || format!("{}: {c:?}", label(&fx)))?;
        if lambda_is(&p, "1/4") {
            println!("    λ=1/4 on {}: leibniz {} conditions {}", label(&fx), c.leibniz, c.conditions());
        }
    }
    Ok(())
}

fn routes(alg: &Algebra, c: &Element) -> Result<(bool, bool, bool), String> {
    let direct = match verify_axis(alg, c) {
        Ok(_) => true,
        Err(AxisError::NotAnAxis(_)) => false,
        Err(e) => return Err(e.to_string()),
    };
    let by_q = match verify_axis_via_q(alg, c) {
        Ok(v) => v,
        Err(AxisError::NotIdempotent) => false,
        Err(e) => return Err(e.to_string()),
    };
    let by_p = match verify_axis_via_p(alg, c) {
        Ok(v) => v,
        Err(AxisError::NotIdempotent | AxisError::FormNotOne(_)) => false,
        Err(e) => return Err(e.to_string()),
    };
    Ok((direct, by_q, by_p))
}

/// Spin factor `F1 + Fu` with the form doubled: still Frobenius, and
/// `(1 + u)/2` is an idempotent with the right spectrum but `(c,c) = 2`.
const SCALED_SPIN: &str =
    "field Q\ndim 2\nmult 0 0 0 1\nmult 0 1 1 1\nmult 1 1 0 1\nform 0 0 4\nform 1 1 4\n";

fn criterion_6() -> Outcome {
    let mut cases: Vec<(String, Algebra, Element, bool)> = Vec::new();
    for fx in pair_fixtures() {
        for n in ["a", "b"] {
            cases.push((
                format!("{} {n}", label(&fx)),
                fx.algebra.clone(),
                fx.element(n).unwrap().clone(),
                true,
            ));
        }
    }
    let split = fixture("split", q());
    cases.push(("split c".into(), split.algebra.clone(), split.element("c").unwrap().clone(), false));
    cases.push(("split e0".into(), split.algebra.clone(), split.algebra.basis_element(0), true));
    let spin = fixture("spin:1/3", q());
    cases.push(("spin identity".into(), spin.algebra.clone(), spin.algebra.basis_element(0), false));
    let scaled = parse_algebra(SCALED_SPIN).unwrap();
    let c = scaled.element(vec![q().half(), q().half()]).unwrap();
    cases.push(("scaled spin (1+u)/2".into(), scaled, c, false));
    let s4 = fixture("matsuo:S4", q());
    for i in 0..s4.algebra.dim() {
        cases.push((format!("matsuo:S4 e{i}"), s4.algebra.clone(), s4.algebra.basis_element(i), true));
    }
    require(cases.len() >= 8, || "too few idempotents".into())?;
    for (name, alg, c, expected) in &cases {
        require(alg.multiply(c, c).unwrap() == *c, || format!("{name} is not idempotent"))?;
        let (d, qr, pr) = routes(alg, c)?;
        require(d == qr && qr == pr, || format!("{name}: routes disagree ({d}, {qr}, {pr})"))?;
        require(d == *expected, || format!("{name}: expected axis = {expected}"))?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for field in [q(), gf(5)] {
        let fx = lambda_one_fixture(field).unwrap();
        let p = pair(&fx);
        for id in ["T.AB12.1", "T.AB12.2i", "T.AB12.2ii"] {
            expect_pass(&p, id, &label(&fx))?;
        }
    }
    let fx = lambda_one_fixture(gf(3)).unwrap();
    let p = pair(&fx);
    expect_skip(&p, "T.AB12.2i", "GF(3)")?;
    expect_skip(&p, "T.AB12.2ii", "GF(3)")?;
    expect_pass(&p, "T.AB12.1", "GF(3)")?;
    // b0 != 0 at λ = 1: T.AB12.1 does not apply, T.AB12.2* do
    let fx = fixture("sym:1,1,2", gf(5));
    let p = pair(&fx);
    expect_skip(&p, "T.AB12.1", "sym GF(5)")?;
    expect_pass(&p, "T.AB12.2i", "sym GF(5)")?;
    expect_pass(&p, "T.AB12.2ii", "sym GF(5)")
}

fn axis_fixtures() -> Vec<(String, Algebra, Element)> {
    let mut out = Vec::new();
    for fx in pair_fixtures() {
        for n in ["a", "b"] {
            out.push((format!("{} {n}", label(&fx)), fx.algebra.clone(), fx.element(n).unwrap().clone()));
        }
    }
    let split = fixture("split", q());
    out.push(("split e0".into(), split.algebra.clone(), split.algebra.basis_element(0)));
    out
}

fn criterion_8() -> Outcome {
    for (name, alg, c) in axis_fixtures() {
        let cert = verify_axis(&alg, &c).map_err(|e| format!("{name}: {e}"))?;
        let tau = cert.miyamoto();
        let id = Matrix::identity(alg.field(), alg.dim());
        require(alg.is_automorphism(&tau).unwrap().passed(), || format!("{name}: τ not an automorphism"))?;
        require(tau.mul(&tau) == id, || format!("{name}: τ² ≠ 1"))?;
        let nontrivial = cert.half_space().dim() > 0;
        require((tau != id) == nontrivial, || format!("{name}: τ ≠ 1 should be {nontrivial}"))?;
    }
    Ok(())
}

fn random_element(alg: &Algebra, rng: &mut ChaCha8Rng) -> Element {
    let f = alg.field();
    alg.element((0..alg.dim()).map(|_| f.from_i64(rng.gen_range(-6..=6))).collect()).unwrap()
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (name, alg, c) in axis_fixtures() {
        let cert = verify_axis(&alg, &c).unwrap();
        require(cert.check_orthogonality().passed(), || format!("{name}: orthogonality"))?;
        for _ in 0..100 {
            let x = random_element(&alg, &mut rng);
            let z = random_element(&alg, &mut rng);
            let d = cert.decompose(&z).unwrap();
            // y = alpha a + z0 ranges over Fa + A0
            let y = alg.add(&alg.scale(&d.alpha, &c).unwrap(), &d.x0).unwrap();
            let r = cert.check_seress(&x, &y).map_err(|e| format!("{name}: {e}"))?;
            require(alg.is_zero(&r), || format!("{name}: Seress residual {r}"))?;
            require(cert.reconstruct(&d) == z, || format!("{name}: reconstruct"))?;
        }
    }
    Ok(())
}

fn run_cli(args: &[&str]) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_axial"))
        .args(args)
        .output()
        .expect("binary runs")
        .status
        .code()
        .unwrap_or(-1)
}

fn criterion_10() -> Outcome {
    let mandatory: [&[&str]; 6] = [
        &["--fixture", "spin:0"],
        &["--fixture", "spin:1/3"],
        &["--fixture", "spin:1/2"],
        &["--fixture", "spin:2/5"],
        &["--fixture", "matsuo:S4", "--a", "0", "--b", "5"],
        &["--fixture", "lambda-one"],
    ];
    for extra in mandatory {
        for tier in ["mandatory", "extended"] {
            let mut args = vec!["suite", "--tier", tier];
            args.extend_from_slice(extra);
            let code = run_cli(&args);
            require(code == 0, || format!("{args:?} exited {code}"))?;
        }
    }
    for fx in pair_fixtures() {
        let p = pair(&fx);
        let reports = run_suite(&p, Tier::Extended, None, Execution::Parallel).map_err(|e| e.to_string())?;
        if let Some(r) = reports.iter().find(|r| !r.failures.is_empty()) {
            return Err(format!("{}: extended {} failed", label(&fx), r.id));
        }
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut algebras: Vec<(String, Algebra)> =
        pair_fixtures().into_iter().map(|f| (label(&f), f.algebra)).collect();
    algebras.push(("split".into(), fixture("split", q()).algebra));
    algebras.push(("matsuo:S5".into(), fixture("matsuo:S5", q()).algebra));
    for (i, (name, alg)) in algebras.iter().enumerate() {
        let path = dir.path().join(format!("{i}.alg"));
        save_algebra(alg, &path).map_err(|e| format!("{name}: {e}"))?;
        let back = load_algebra(&path).map_err(|e| format!("{name}: {e}"))?;
        require(back.same_structure(alg), || format!("{name}: round trip changed the algebra"))?;
    }
    // (e0 e0, e1) = 0 but (e0, e0 e1) = 1
    let bad = "field Q\ndim 2\nmult 0 0 0 1\nmult 0 1 0 1\nform 0 0 1\nform 1 1 1\n";
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, bad).unwrap();
    match load_algebra(&path) {
        Err(FormatError::Algebra(AlgebraError::NotFrobenius { .. })) => Ok(()),
        other => Err(format!("bad file gave {other:?}")),
    }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("fixture soundness", criterion_1),
        ("SI.1-SI.8 on all fixtures", criterion_2),
        ("T0012 for λ ≠ 1/4, skipped at 1/4", criterion_3),
        ("T121212 and T120 for λ ∉ {1, 1/4}; [L_a,L_b] is a derivation", criterion_4),
        ("derivation criterion equivalence", criterion_5),
        ("axis certification routes agree", criterion_6),
        ("λ = 1 and characteristic 3", criterion_7),
        ("Miyamoto involution", criterion_8),
        ("orthogonality, Seress, decomposition", criterion_9),
        ("suite via the CLI", criterion_10),
        ("file round trip", criterion_11),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        match check() {
            Ok(()) => println!("criterion {n:>2} PASS  {name}"),
            Err(e) => {
                println!("criterion {n:>2} FAIL  {name}: {e}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
