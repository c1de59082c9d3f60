//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weilcert_core::certify::{run_pipeline, verify_certificate, Certificate, SeededSampler, Verdict};
use weilcert_core::weil::{
    check_identities, det_m, eigen_decomposition, eliminate, genus_check, quadric_kernel_dim,
    verify_diagonal, CoefficientTriple,
};
use weilcert_core::{
    rational, GaussianRational, Monomial, PolyMatrix, Polynomial, ScalarMatrix, VariableRegistry,
    ZeroFreeVerdict,
};

type Check = Result<String, String>;

type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn identities() -> Check {
    let checks = check_identities().map_err(err)?;
    ensure(checks.len() == 17, format!("{} identities checked", checks.len()))?;
    if let Some(bad) = checks.iter().find(|c| !c.passed()) {
        return Err(format!("{} has residual {}", bad.name, bad.residual));
    }
    Ok("17/17 identities reduce to 0".into())
}

fn eigenspaces() -> Check {
    let d = eigen_decomposition().map_err(err)?;
    ensure(d.dims() == [6, 4, 3, 3], format!("dims {:?}", d.dims()))?;
    ensure(d.total_rank == 16, format!("joint rank {}", d.total_rank))?;
    Ok(format!("dims {:?}, spans match named generators", d.dims()))
}

fn diagonal() -> Check {
    let r = verify_diagonal().map_err(err)?;
    ensure(r.base_points == ZeroFreeVerdict::CertifiedEmpty, "base points not excluded")?;
    let factors: Vec<String> = r.factors.iter().map(ToString::to_string).collect();
    Ok(format!("factors [{}], no common zero", factors.join(", ")))
}

fn determinant() -> Check {
    let elim = eliminate().map_err(err)?;
    let det = det_m(&elim).map_err(err)?;
    let at_origin = det.evaluate(&CoefficientTriple::origin().point()).map_err(err)?;
    ensure(at_origin == GaussianRational::from(1), format!("det M(0) = {at_origin}"))?;
    ensure(!det.is_zero(), "det M is the zero polynomial")?;
    let full = elim.full.det_bareiss();
    let sign = if full == det {
        "+"
    } else if full == -&det {
        "-"
    } else {
        return Err("det(9x9) differs from +-det M".into());
    };
    Ok(format!(
        "det M(0) = 1, {} terms, det(9x9) = {sign}det M",
        det.len()
    ))
}

fn quadric() -> Check {
    let elim = eliminate().map_err(err)?;
    let origin = quadric_kernel_dim(&elim.specialize(&CoefficientTriple::origin()).map_err(err)?);
    ensure(origin == 3, format!("kernel dim {origin} at the origin"))?;
    let n = 20;
    for (k, t) in SeededSampler::new(0).take(n).enumerate() {
        let dim = quadric_kernel_dim(&elim.specialize(&t).map_err(err)?);
        ensure(dim == 1, format!("kernel dim {dim} at sample {k} ({t})"))?;
    }
    Ok(format!("kernel dim 3 at origin, 1 at {n}/{n} samples"))
}

fn genus() -> Check {
    let r = genus_check();
    ensure(r.top_coefficient == 24, format!("coefficient {}", r.top_coefficient))?;
    ensure(r.genus == 13, format!("genus {}", r.genus))?;
    Ok("coefficient 24, genus 13".into())
}

fn witness() -> Check {
    let cert = run_pipeline(0, 100).map_err(err)?;
    ensure(cert.overall == Verdict::Pass, "overall verdict is Fail")?;
    ensure(cert.witness_kernel_dim == Some(1), "kernel dim at witness is not 1")?;
    ensure(
        cert.fixed_point_free == Some(ZeroFreeVerdict::CertifiedEmpty),
        "fixed-point-free check inconclusive",
    )?;
    let detm = cert.witness_detm.clone().ok_or("no det M value")?;
    ensure(detm != rational(0, 1), "det M vanishes at witness")?;
    verify_certificate(&cert).map_err(err)?;
    let json = cert.to_json().map_err(err)?;
    let reparsed = Certificate::from_json(&json).map_err(err)?;
    ensure(reparsed.to_json().map_err(err)? == json, "serialization does not round-trip")?;
    let again = run_pipeline(0, 100).map_err(err)?.to_json().map_err(err)?;
    ensure(again == json, "repeated run differs")?;
    let w = cert.witness.as_ref().ok_or("no witness")?;
    Ok(format!(
        "witness [{w}] at attempt {}, det M = {detm}, re-verified",
        cert.witness_attempt.unwrap_or_default()
    ))
}

fn small_gr(rng: &mut ChaCha8Rng) -> GaussianRational {
    let re = rational(rng.gen_range(-5..=5), rng.gen_range(1..=3));
    let im = if rng.gen_bool(0.3) {
        rational(rng.gen_range(-3..=3), rng.gen_range(1..=2))
    } else {
        rational(0, 1)
    };
    GaussianRational::new(re, im)
}

fn random_poly(rng: &mut ChaCha8Rng, reg: &Arc<VariableRegistry>, max_terms: usize, max_exp: u32) -> Polynomial {
    let n = rng.gen_range(0..=max_terms);
    let terms: Vec<(Monomial, GaussianRational)> = (0..n)
        .map(|_| {
            let exps = (0..reg.len()).map(|_| rng.gen_range(0..=max_exp)).collect();
            (Monomial::from_exponents(exps), small_gr(rng))
        })
        .collect();
    Polynomial::from_terms(reg, terms)
}

fn random_point(rng: &mut ChaCha8Rng, reg: &VariableRegistry) -> Vec<(String, GaussianRational)> {
    reg.names().iter().map(|n| (n.clone(), small_gr(rng))).collect()
}

fn borrowed<T: Clone>(v: &[(String, T)]) -> Vec<(&str, T)> {
    v.iter().map(|(n, x)| (n.as_str(), x.clone())).collect()
}

fn oracles() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);

    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let entries = (0..n * n).map(|_| small_gr(&mut rng)).collect();
        let m = ScalarMatrix::new(n, n, entries).map_err(err)?;
        let (b, c) = (m.det_bareiss().map_err(err)?, m.det_cofactor().map_err(err)?);
        ensure(b == c, format!("scalar {n}x{n}: Bareiss {b}, cofactor {c}"))?;
    }
    let reg = VariableRegistry::new(["u", "v", "w"]).map_err(err)?;
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let entries = (0..n * n).map(|_| random_poly(&mut rng, &reg, 3, 2)).collect();
        let m = PolyMatrix::new(n, n, entries).map_err(err)?;
        ensure(m.det_bareiss() == m.det_cofactor(), format!("polynomial {n}x{n} determinants differ"))?;
    }

    let elim = eliminate().map_err(err)?;
    let det = det_m(&elim).map_err(err)?;
    for _ in 0..50 {
        let t = CoefficientTriple::from_values(std::array::from_fn(|_| {
            rational(rng.gen_range(-10..=10), rng.gen_range(1..=4))
        }));
        let lhs = det.evaluate(&t.point()).map_err(err)?;
        let rhs = elim.specialize(&t).map_err(err)?.m.det_bareiss().map_err(err)?;
        ensure(lhs == rhs, format!("evaluate/det disagree at [{t}]"))?;
    }

    for _ in 0..200 {
        let p = random_poly(&mut rng, &reg, 4, 3);
        let q = random_poly(&mut rng, &reg, 4, 3);
        let owned = random_point(&mut rng, &reg);
        let point = borrowed(&owned);
        let ev = |f: &Polynomial| f.evaluate(&point).map_err(err);
        ensure(ev(&(&p + &q))? == &ev(&p)? + &ev(&q)?, "evaluate(p + q)")?;
        ensure(ev(&(&p * &q))? == &ev(&p)? * &ev(&q)?, "evaluate(p * q)")?;

        let r = random_poly(&mut rng, &reg, 3, 2);
        let sub = |f: &Polynomial| f.substitute(&[("u", r.clone())]).map_err(err);
        ensure(sub(&(&p * &q))? == &sub(&p)? * &sub(&q)?, "substitute(p * q)")?;
        ensure(sub(&(&p + &q))? == &sub(&p)? + &sub(&q)?, "substitute(p + q)")?;
        let mut shifted = point.clone();
        shifted[0].1 = ev(&r)?;
        ensure(ev(&sub(&p)?)? == p.evaluate(&shifted).map_err(err)?, "evaluate after substitute")?;
    }
    Ok("200 determinant pairs, 50 evaluation triples, 200 homomorphism pairs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("identity suite", Duration::from_secs(5), identities),
        ("eigenspaces", Duration::from_secs(1), eigenspaces),
        ("diagonal restriction", Duration::from_secs(5), diagonal),
        ("determinant certificate", Duration::from_secs(30), determinant),
        ("quadric uniqueness", Duration::from_secs(10), quadric),
        ("genus", Duration::from_secs(1), genus),
        ("witness", Duration::from_secs(60), witness),
        ("oracle equivalences", Duration::from_secs(30), oracles),
    ];
    let mut failures = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) if elapsed <= *limit => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; exceeded {limit:?}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "criterion {} {status} {name} ({:.2}s / {}s): {detail}",
            k + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
