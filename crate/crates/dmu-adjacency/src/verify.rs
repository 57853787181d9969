//! The cross-check suites behind the `verify` and `closed-forms` commands.

use dmu_adjacency::types::{DGerm, MultisingularityType, Sign};
use dmu_adjacency::{catalog, formula, oracle};

pub struct CheckStats {
    pub name: &'static str,
    pub pass: u64,
    pub fail: u64,
}

impl CheckStats {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            pass: 0,
            fail: 0,
        }
    }

    fn record(&mut self, ok: bool) -> bool {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
        }
        ok
    }
}

pub struct VerifySummary {
    pub max_mu: u64,
    pub cap: u64,
    pub germs: u64,
    pub candidates: u64,
    pub checks: Vec<CheckStats>,
    pub failures: Vec<String>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|check| check.fail == 0)
    }
}

fn germs_of_index(mu: u64) -> Vec<DGerm> {
    if mu.is_multiple_of(2) {
        vec![DGerm::new(mu, Sign::Plus), DGerm::new(mu, Sign::Minus)]
    } else {
        vec![DGerm::new(mu, Sign::Plus)]
    }
}

/// Checks, for every germ of index up to `max_mu` and every candidate type:
/// dual-path equality, agreement with the arrangement oracle, the two closed
/// forms, and sign invariance for odd indices. A word-cap overflow aborts
/// the run; everything else is counted and reported.
pub fn run_verify(
    max_mu: u64,
    cap: u64,
    quiet: bool,
) -> Result<VerifySummary, oracle::OracleError> {
    let mut dual = CheckStats::new("dual-path equality");
    let mut against_oracle = CheckStats::new("oracle equality");
    let mut closed = CheckStats::new("closed forms");
    let mut invariance = CheckStats::new("odd-mu sign invariance");
    let mut failures = Vec::new();
    let mut germs = 0;
    let mut candidates = 0;

    for mu in 4..=max_mu {
        for germ in germs_of_index(mu) {
            germs += 1;
            let types = catalog::enumerate_candidate_types(germ);
            if !quiet {
                eprintln!("checking {germ}: {} candidate types", types.len());
            }
            for ty in &types {
                candidates += 1;

                let integer = formula::compute_terms_integer(germ, ty);
                match formula::compute_terms_rational(germ, ty) {
                    Ok(rational) => {
                        let agree = rational.i0 == integer.i0()
                            && rational.i1 == integer.i1
                            && rational.i2_term == integer.pi2
                            && rational.i3_term == integer.pi3;
                        if !dual.record(agree) {
                            failures.push(format!(
                                "dual-path mismatch for {germ} {ty}: published I0={} I1={} I2term={} I3term={} vs proof I0={} I1={} pi2={} pi3={}",
                                rational.i0, rational.i1, rational.i2_term, rational.i3_term,
                                integer.i0(), integer.i1, integer.pi2, integer.pi3,
                            ));
                        }
                    }
                    Err(error) => {
                        dual.record(false);
                        failures.push(format!("published form failed for {germ} {ty}: {error}"));
                    }
                }

                let formula_j = integer.i0() + &integer.i1 + &integer.pi2 + &integer.pi3;
                let oracle_j = oracle::oracle_adjacency_index(germ, ty, cap)?;
                if !against_oracle.record(oracle_j == formula_j) {
                    failures.push(format!(
                        "oracle mismatch for {germ} {ty}: formula {formula_j}, enumeration {oracle_j}"
                    ));
                }
            }

            let single_a1 = MultisingularityType::single(1, 1);
            match formula::adjacency_index(germ, &single_a1) {
                Ok(report) => {
                    let expected = formula::closed_form_a1(germ);
                    if !closed.record(report.j == expected) {
                        failures.push(format!(
                            "A1 closed form mismatch for {germ}: formula {}, closed form {expected}",
                            report.j
                        ));
                    }
                }
                Err(error) => {
                    closed.record(false);
                    failures.push(format!("index of {germ} at A1 failed: {error}"));
                }
            }
            match formula::adjacency_index(germ, &MultisingularityType::one()) {
                Ok(report) => {
                    let expected = formula::closed_form_trivial(germ);
                    if !closed.record(report.j == expected) {
                        failures.push(format!(
                            "empty-type closed form mismatch for {germ}: formula {}, closed form {expected}",
                            report.j
                        ));
                    }
                }
                Err(error) => {
                    closed.record(false);
                    failures.push(format!("index of {germ} at 1 failed: {error}"));
                }
            }
        }

        if mu % 2 == 1 {
            for ty in catalog::enumerate_candidate_types(DGerm::new(mu, Sign::Plus)) {
                let plus = formula::adjacency_terms(mu, Sign::Plus, &ty);
                let minus = formula::adjacency_terms(mu, Sign::Minus, &ty);
                match (plus, minus) {
                    (Ok(plus), Ok(minus)) => {
                        if !invariance.record(plus == minus) {
                            failures.push(format!(
                                "sign dependence for odd mu={mu} at {ty}: J+={}, J-={}",
                                plus.index(),
                                minus.index()
                            ));
                        }
                    }
                    (plus, minus) => {
                        invariance.record(false);
                        failures.push(format!(
                            "evaluation failed for odd mu={mu} at {ty}: {plus:?} vs {minus:?}"
                        ));
                    }
                }
            }
        }
    }

    Ok(VerifySummary {
        max_mu,
        cap,
        germs,
        candidates,
        checks: vec![dual, against_oracle, closed, invariance],
        failures,
    })
}

pub struct ClosedFormsSummary {
    pub max_k: u64,
    pub checks: Vec<CheckStats>,
    pub failures: Vec<String>,
}

impl ClosedFormsSummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|check| check.fail == 0)
    }
}

/// Compares the index of `A1` and of the empty type with their closed forms
/// for every germ with `2 <= k <= max_k` (`mu = 2k` of both signs and
/// `mu = 2k + 1`).
pub fn run_closed_forms(max_k: u64) -> Result<ClosedFormsSummary, formula::FormulaError> {
    let mut smooth_pieces = CheckStats::new("A1 closed form");
    let mut complement = CheckStats::new("empty-type closed form");
    let mut failures = Vec::new();
    let single_a1 = MultisingularityType::single(1, 1);

    for k in 2..=max_k {
        let mut germs = germs_of_index(2 * k);
        germs.extend(germs_of_index(2 * k + 1));
        for germ in germs {
            let report = formula::adjacency_index(germ, &single_a1)?;
            let expected = formula::closed_form_a1(germ);
            if !smooth_pieces.record(report.j == expected) {
                failures.push(format!(
                    "A1 closed form mismatch for {germ}: formula {}, closed form {expected}",
                    report.j
                ));
            }

            let report = formula::adjacency_index(germ, &MultisingularityType::one())?;
            let expected = formula::closed_form_trivial(germ);
            if !complement.record(report.j == expected) {
                failures.push(format!(
                    "empty-type closed form mismatch for {germ}: formula {}, closed form {expected}",
                    report.j
                ));
            }
        }
    }

    Ok(ClosedFormsSummary {
        max_k,
        checks: vec![smooth_pieces, complement],
        failures,
    })
}
