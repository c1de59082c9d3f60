//! The end-to-end pipeline and its serializable certificate.
//!
//! Witness triples are drawn from a ChaCha8 stream seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`, nine independent uniform integers in
//! `[-10, 10]` per triple, in the order `A1..A3, B1..B3, C1..C3`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{rational, GaussianRational, Rational};
use crate::multipoly::{Polynomial, ZeroFreeVerdict};
use crate::weil::{
    check_identities, det_m, eigen_decomposition, eliminate, fixed_point_free_check, genus_check,
    independence_certificate, quadric_kernel_dim, verify_diagonal, CoefficientTriple,
    EliminationResult,
};

pub const TOOL_VERSION: &str = concat!("weilcert ", env!("CARGO_PKG_VERSION"));

pub const SAMPLE_RANGE: i64 = 10;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Self::Pass
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IdentityVerdict {
    pub name: String,
    pub verdict: Verdict,
}

mod rational_strings {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        values.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|p| p.parse::<Rational>().map_err(D::Error::custom))
            .collect()
    }
}

mod opt_rational_string {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        value.as_ref().map(ToString::to_string).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|p| p.parse::<Rational>().map_err(D::Error::custom))
            .transpose()
    }
}

/// Every verdict of one pipeline run. Field order is the serialization order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub tool_version: String,
    pub seed: u64,
    pub max_attempts: usize,
    pub identity_verdicts: Vec<IdentityVerdict>,
    pub eigenspace_dims: [usize; 4],
    #[serde(with = "rational_strings")]
    pub diagonal_factors: Vec<Rational>,
    pub chow_coefficient: i64,
    pub genus: i64,
    pub detm_at_origin: GaussianRational,
    pub detm_term_count: usize,
    pub detm_nonzero: bool,
    pub witness: Option<CoefficientTriple>,
    /// Zero-based index of the witness in the sampled sequence.
    pub witness_attempt: Option<usize>,
    #[serde(with = "opt_rational_string")]
    pub witness_detm: Option<Rational>,
    pub witness_kernel_dim: Option<usize>,
    pub fixed_point_free: Option<ZeroFreeVerdict>,
    pub overall: Verdict,
}

impl Certificate {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    fn universal_checks_pass(&self) -> bool {
        self.identity_verdicts.len() == 17
            && self.identity_verdicts.iter().all(|v| v.verdict.is_pass())
            && self.eigenspace_dims == [6, 4, 3, 3]
            && self.chow_coefficient == 24
            && self.genus == 13
            && self.detm_at_origin == GaussianRational::from(1)
            && self.detm_nonzero
    }

    fn witness_checks_pass(&self) -> bool {
        self.witness.is_some()
            && self.witness_detm.as_ref().is_some_and(|d| *d != rational(0, 1))
            && self.witness_kernel_dim == Some(1)
            && self.fixed_point_free == Some(ZeroFreeVerdict::CertifiedEmpty)
    }

    /// Recomputes the overall verdict from the individual fields.
    pub fn derived_overall(&self) -> Verdict {
        Verdict::from_bool(self.universal_checks_pass() && self.witness_checks_pass())
    }
}

/// Deterministic source of candidate triples.
#[derive(Clone, Debug)]
pub struct SeededSampler {
    seed: u64,
    rng: ChaCha8Rng,
}

impl SeededSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_triple(&mut self) -> CoefficientTriple {
        let rng = &mut self.rng;
        CoefficientTriple::from_values(std::array::from_fn(|_| {
            rational(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE), 1)
        }))
    }
}

impl Iterator for SeededSampler {
    type Item = CoefficientTriple;

    fn next(&mut self) -> Option<CoefficientTriple> {
        Some(self.next_triple())
    }
}

/// Witness-local values at one triple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessReport {
    pub detm: Rational,
    pub kernel_dim: usize,
    pub fixed_point_free: ZeroFreeVerdict,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.detm != rational(0, 1)
            && self.kernel_dim == 1
            && self.fixed_point_free == ZeroFreeVerdict::CertifiedEmpty
    }
}

pub fn check_witness(
    elimination: &EliminationResult,
    det: &Polynomial,
    triple: &CoefficientTriple,
) -> Result<WitnessReport> {
    let independence = independence_certificate(elimination, det, triple)?;
    let detm = independence
        .det_value
        .to_rational()
        .expect("det M has rational coefficients");
    let kernel_dim = quadric_kernel_dim(&elimination.specialize(triple)?);
    let fixed_point_free = fixed_point_free_check(triple)?;
    Ok(WitnessReport {
        detm,
        kernel_dim,
        fixed_point_free,
    })
}

/// Runs every universal check, then searches `max_attempts` sampled triples
/// for a witness. Candidates are checked in parallel; the first passing one
/// in sampling order is recorded.
pub fn run_pipeline(seed: u64, max_attempts: usize) -> Result<Certificate> {
    let identity_verdicts = check_identities()?
        .into_iter()
        .map(|c| IdentityVerdict {
            verdict: Verdict::from_bool(c.passed()),
            name: c.name.to_string(),
        })
        .collect();
    let eigenspace_dims = eigen_decomposition()?.dims();
    let diagonal_factors = verify_diagonal()?.factors;
    let genus = genus_check();

    let elimination = eliminate()?;
    let det = det_m(&elimination)?;
    let detm_at_origin = det.evaluate(&CoefficientTriple::origin().point())?;

    let candidates: Vec<CoefficientTriple> = SeededSampler::new(seed).take(max_attempts).collect();
    let found = candidates
        .par_iter()
        .enumerate()
        .map(|(k, t)| check_witness(&elimination, &det, t).map(|r| (k, r)))
        .find_map_first(|r| match r {
            Ok((_, report)) if !report.passed() => None,
            other => Some(other),
        })
        .transpose()?;

    let mut cert = Certificate {
        tool_version: TOOL_VERSION.to_string(),
        seed,
        max_attempts,
        identity_verdicts,
        eigenspace_dims,
        diagonal_factors,
        chow_coefficient: genus.top_coefficient,
        genus: genus.genus,
        detm_at_origin,
        detm_term_count: det.len(),
        detm_nonzero: !det.is_zero(),
        witness: None,
        witness_attempt: None,
        witness_detm: None,
        witness_kernel_dim: None,
        fixed_point_free: None,
        overall: Verdict::Fail,
    };
    match found {
        Some((k, report)) => {
            cert.witness = Some(candidates[k].clone());
            cert.witness_attempt = Some(k);
            cert.witness_detm = Some(report.detm);
            cert.witness_kernel_dim = Some(report.kernel_dim);
            cert.fixed_point_free = Some(report.fixed_point_free);
            cert.overall = cert.derived_overall();
            Ok(cert)
        }
        None => Err(Error::WitnessNotFound {
            attempts: max_attempts,
            certificate: Box::new(cert),
        }),
    }
}

fn mismatch(field: &str, recorded: impl ToString, recomputed: impl ToString) -> Error {
    Error::Mismatch {
        field: field.to_string(),
        recorded: recorded.to_string(),
        recomputed: recomputed.to_string(),
    }
}

fn show<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).unwrap_or_default()
}

/// Re-checks a certificate: first the witness-local values at the recorded
/// triple, then a full re-run with the recorded seed, compared field by field.
pub fn verify_certificate(cert: &Certificate) -> Result<()> {
    let witness = cert.witness.as_ref().ok_or(Error::MissingWitness)?;
    let elimination = eliminate()?;
    let det = det_m(&elimination)?;
    let report = check_witness(&elimination, &det, witness)?;

    if cert.witness_kernel_dim != Some(report.kernel_dim) {
        return Err(mismatch("witness_kernel_dim", show(&cert.witness_kernel_dim), report.kernel_dim));
    }
    if cert.witness_detm.as_ref() != Some(&report.detm) {
        return Err(mismatch("witness_detm", show(&cert.witness_detm.as_ref().map(ToString::to_string)), &report.detm));
    }
    if cert.fixed_point_free != Some(report.fixed_point_free) {
        return Err(mismatch("fixed_point_free", show(&cert.fixed_point_free), show(&report.fixed_point_free)));
    }
    if cert.overall != cert.derived_overall() {
        return Err(mismatch("overall", show(&cert.overall), show(&cert.derived_overall())));
    }

    let fresh = match run_pipeline(cert.seed, cert.max_attempts) {
        Ok(c) => c,
        Err(Error::WitnessNotFound { certificate, .. }) => *certificate,
        Err(e) => return Err(e),
    };
    let recorded = serde_json::to_value(cert)?;
    let recomputed = serde_json::to_value(&fresh)?;
    if let (Some(a), Some(b)) = (recorded.as_object(), recomputed.as_object()) {
        for (key, value) in b {
            let old = a.get(key).cloned().unwrap_or_default();
            if &old != value {
                return Err(mismatch(key, old, value));
            }
        }
    }
    if cert.to_json()? != fresh.to_json()? {
        return Err(mismatch("certificate", "recorded document", "recomputed document"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_is_deterministic() {
        let a: Vec<_> = SeededSampler::new(3).take(5).collect();
        let b: Vec<_> = SeededSampler::new(3).take(5).collect();
        assert_eq!(a, b);
        let c: Vec<_> = SeededSampler::new(4).take(5).collect();
        assert_ne!(a, c);
        let bound = rational(SAMPLE_RANGE, 1);
        assert!(a.iter().flat_map(|t| t.values()).all(|v| v >= -bound.clone() && v <= bound));
    }

    #[test]
    fn zero_attempts_still_record_universal_checks() {
        let Err(Error::WitnessNotFound { attempts, certificate }) = run_pipeline(5, 0) else {
            panic!("expected WitnessNotFound");
        };
        assert_eq!(attempts, 0);
        assert!(certificate.universal_checks_pass());
        assert_eq!(certificate.overall, Verdict::Fail);
        assert!(matches!(verify_certificate(&certificate), Err(Error::MissingWitness)));
    }

    #[test]
    fn derived_overall_requires_witness() {
        let Err(Error::WitnessNotFound { certificate, .. }) = run_pipeline(0, 0) else {
            panic!("expected WitnessNotFound");
        };
        let mut cert = *certificate;
        assert_eq!(cert.derived_overall(), Verdict::Fail);
        cert.witness = Some(CoefficientTriple::origin());
        cert.witness_detm = Some(rational(1, 1));
        cert.witness_kernel_dim = Some(1);
        cert.fixed_point_free = Some(ZeroFreeVerdict::CertifiedEmpty);
        assert_eq!(cert.derived_overall(), Verdict::Pass);
        cert.eigenspace_dims = [6, 4, 4, 2];
        assert_eq!(cert.derived_overall(), Verdict::Fail);
    }
}
