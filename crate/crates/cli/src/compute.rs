//! Dispatch of `compute` and `oracle` requests to the core algorithms.

use std::time::Instant;

use clap::ValueEnum;
use hdimp_core::geometry::{centres, max_radius, min_radius, pairwise_disjoint};
use hdimp_core::lower_approx::{centre_points, grown_discs};
use hdimp_core::oracle::{oracle_hmax_bracket, oracle_hmin_bracket, oracle_hmin_exact};
use hdimp_core::{
    directed_hausdorff, hmax, hmin_dispatch, independent_sets, place_together, CoverRoutine, IndependentSetsOutcome,
    Tolerance,
};

use crate::document::{Guarantee, GuaranteeKind, InstanceDocument, OracleDocument, Quantity, ResultDocument, Witness};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Auto,
    PlaceTogether,
    IndependentSets,
    GrownDiscs,
    CentrePoints,
    UpperBound,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::PlaceTogether => "place-together",
            Algorithm::IndependentSets => "independent-sets",
            Algorithm::GrownDiscs => "grown-discs",
            Algorithm::CentrePoints => "centre-points",
            Algorithm::UpperBound => "upper-bound",
        }
    }
}

fn mismatch(algorithm: Algorithm, what: &str) -> CliError {
    CliError::Malformed(format!("algorithm {} does not apply to {what}", algorithm.name()))
}

pub fn run_compute(
    doc: &InstanceDocument,
    quantity: Quantity,
    algorithm: Algorithm,
    tol: &Tolerance,
) -> Result<ResultDocument, CliError> {
    let start = Instant::now();
    let mut res = match quantity {
        Quantity::Hmax => compute_hmax(doc, algorithm, tol)?,
        Quantity::Hmin => compute_hmin(doc, algorithm, tol)?,
    };
    res.wall_time_s = start.elapsed().as_secs_f64();
    Ok(res)
}

fn result(quantity: Quantity, value: f64, guarantee: Guarantee, algorithm: &str) -> ResultDocument {
    ResultDocument {
        quantity,
        value,
        guarantee,
        accepted_d: None,
        witness: None,
        algorithm: algorithm.into(),
        wall_time_s: 0.0,
    }
}

fn compute_hmax(doc: &InstanceDocument, algorithm: Algorithm, tol: &Tolerance) -> Result<ResultDocument, CliError> {
    if !matches!(algorithm, Algorithm::Auto | Algorithm::UpperBound) {
        return Err(mismatch(algorithm, "hmax"));
    }
    let up = hmax(&doc.p.discs(), &doc.q.discs(), tol)?;
    let mut res = result(Quantity::Hmax, up.value, Guarantee::exact(), "upper-bound");
    res.witness = Some(Witness::new(&up.witness_p, &up.witness_q));
    Ok(res)
}

fn compute_hmin(doc: &InstanceDocument, algorithm: Algorithm, tol: &Tolerance) -> Result<ResultDocument, CliError> {
    match (doc.p.points(), doc.q.points()) {
        (Some(p), Some(q)) => {
            if algorithm != Algorithm::Auto {
                return Err(mismatch(algorithm, "two precise sides"));
            }
            let mut res = result(
                Quantity::Hmin,
                directed_hausdorff(&p, &q)?,
                Guarantee::exact(),
                "direct",
            );
            res.witness = Some(Witness::new(&p, &q));
            Ok(res)
        }
        (None, Some(q)) => {
            if !matches!(algorithm, Algorithm::Auto | Algorithm::PlaceTogether) {
                return Err(mismatch(algorithm, "an imprecise P with precise Q"));
            }
            let (value, witness) = place_together(&doc.p.discs(), &q)?;
            let mut res = result(Quantity::Hmin, value, Guarantee::exact(), "place-together");
            res.witness = Some(Witness::new(&witness, &q));
            Ok(res)
        }
        (Some(p), None) => hmin_precise_p(&p, doc, algorithm, tol),
        (None, None) => Err(CliError::Unsupported(
            "hmin with both sides imprecise has no constructive algorithm".into(),
        )),
    }
}

fn hmin_precise_p(
    p: &[hdimp_core::Point],
    doc: &InstanceDocument,
    algorithm: Algorithm,
    tol: &Tolerance,
) -> Result<ResultDocument, CliError> {
    let q = doc.q.discs();
    let approx = |a: hdimp_core::ApproxResult| {
        let kind = if a.guarantee_factor == 1.0 {
            GuaranteeKind::Exact
        } else {
            GuaranteeKind::Approx
        };
        let mut res = result(
            Quantity::Hmin,
            a.value,
            Guarantee::factor(kind, a.guarantee_factor),
            &a.algorithm,
        );
        res.accepted_d = a.accepted_d;
        res.witness = Some(Witness::new(p, &a.witness_q));
        res
    };
    match algorithm {
        Algorithm::Auto => Ok(approx(hmin_dispatch(p, &q, tol)?)),
        Algorithm::GrownDiscs => Ok(approx(grown_discs(p, &q, CoverRoutine::Gonzalez, tol)?)),
        Algorithm::IndependentSets => match independent_sets(p, &q, tol)? {
            IndependentSetsOutcome::Exact { value, witness } => {
                let mut res = result(Quantity::Hmin, value, Guarantee::exact(), "independent-sets");
                res.accepted_d = Some(value);
                res.witness = Some(Witness::new(p, &witness));
                Ok(res)
            }
            IndependentSetsOutcome::ThresholdExceeded { threshold } => Ok(result(
                Quantity::Hmin,
                threshold,
                Guarantee::factor(GuaranteeKind::ThresholdExceeded, 1.0),
                "independent-sets",
            )),
        },
        Algorithm::CentrePoints => {
            let value = centre_points(p, &q)?;
            let r = max_radius(&q);
            // Off by at most r in general; within 3x for equal disjoint discs above 1.5 r.
            let equal = r - min_radius(&q) <= tol.eps_predicate && pairwise_disjoint(&q, tol);
            let guarantee = if equal && value > 1.5 * r {
                Guarantee::factor(GuaranteeKind::Approx, 3.0)
            } else {
                Guarantee {
                    kind: GuaranteeKind::Approx,
                    factor: None,
                    additive: Some(r),
                }
            };
            let mut res = result(Quantity::Hmin, value, guarantee, "centre-points");
            res.witness = Some(Witness::new(p, &centres(&q)));
            Ok(res)
        }
        Algorithm::PlaceTogether | Algorithm::UpperBound => Err(mismatch(algorithm, "hmin with precise P")),
    }
}

/// Sampled bracket of the requested quantity, plus the exact enumeration
/// value when P is precise and the instance is small.
pub fn run_oracle(
    doc: &InstanceDocument,
    quantity: Quantity,
    step: f64,
    tol: &Tolerance,
) -> Result<OracleDocument, CliError> {
    if !(step.is_finite() && step > 0.0) {
        return Err(CliError::Malformed(format!("step {step} must be positive")));
    }
    let start = Instant::now();
    let (p, q) = (doc.p.discs(), doc.q.discs());
    let (bracket, exact) = match quantity {
        Quantity::Hmax => (oracle_hmax_bracket(&p, &q, step)?, None),
        Quantity::Hmin => {
            let exact = match doc.p.points() {
                Some(points) => match oracle_hmin_exact(&points, &q, tol) {
                    Ok(v) => Some(v),
                    Err(hdimp_core::Error::BudgetExceeded(_)) => None,
                    Err(e) => return Err(e.into()),
                },
                None => None,
            };
            (oracle_hmin_bracket(&p, &q, step)?, exact)
        }
    };
    Ok(OracleDocument {
        quantity,
        lower: bracket.lower,
        upper: bracket.upper,
        step,
        exact,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}
