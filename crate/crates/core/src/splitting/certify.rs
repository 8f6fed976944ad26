use serde::Serialize;

use super::abc::{complement_ideal, cycle_ideal};
use super::function::{
    build_splitting_function, candidate_table, first_candidate_function, search_splitting_function,
    verify_lcm_condition, verify_strict_divisibility, SplittingFunction, SubsetCheck,
    DEFAULT_SEARCH_LIMIT, DEFAULT_VERIFY_LIMIT,
};
use crate::error::Result;
use crate::graph::{hypothesis_violation, CyclePartition, Graph};
use crate::monomial::intersect;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedSplitting,
    HypothesisFailsButSplittingFound,
    NoSplittingFunction,
    NotChecked,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CertifiedSplitting => "certified-splitting",
            Verdict::HypothesisFailsButSplittingFound => "hypothesis-fails-but-splitting-found",
            Verdict::NoSplittingFunction => "no-splitting-function",
            Verdict::NotChecked => "not-checked",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    /// Fall back to exhaustive search when the degree hypothesis fails.
    pub search: bool,
    pub max_verify_generators: usize,
    pub max_search_generators: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            search: true,
            max_verify_generators: DEFAULT_VERIFY_LIMIT,
            max_search_generators: DEFAULT_SEARCH_LIMIT,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitCertificate {
    pub cycle: Vec<String>,
    pub hypothesis_holds: bool,
    pub hypothesis_violation: Option<[String; 2]>,
    pub nonzero_parts: bool,
    pub intersection_generators: usize,
    pub condition_a: bool,
    pub condition_b: bool,
    pub witness: Option<SubsetCheck>,
    pub verdict: Verdict,
    pub splitting_function: Option<SplittingFunction>,
}

impl SplitCertificate {
    /// `certified-splitting` only with every flag set, and so on.
    pub fn is_consistent(&self) -> bool {
        match self.verdict {
            Verdict::CertifiedSplitting => {
                self.hypothesis_holds
                    && self.nonzero_parts
                    && self.condition_a
                    && self.condition_b
                    && self.splitting_function.is_some()
            }
            Verdict::HypothesisFailsButSplittingFound => {
                !self.hypothesis_holds
                    && self.nonzero_parts
                    && self.condition_a
                    && self.condition_b
                    && self.splitting_function.is_some()
            }
            Verdict::NoSplittingFunction => {
                self.nonzero_parts && !self.condition_b && self.splitting_function.is_none()
            }
            Verdict::NotChecked => !(self.condition_a && self.condition_b) || !self.nonzero_parts,
        }
    }
}

/// Decides whether the cycle splits the edge ideal of `g`.
///
/// Under the degree hypothesis the explicit function is built and both
/// conditions are verified exhaustively. Otherwise, with `opts.search`, every
/// function satisfying the lcm condition is tried.
pub fn certify(g: &Graph, cp: &CyclePartition, opts: &CertifyOptions) -> Result<SplitCertificate> {
    super::abc::check_partition(g, cp)?;
    let j = cycle_ideal(g, cp);
    let k = complement_ideal(g, cp);
    let violation = hypothesis_violation(g, cp);
    let mut cert = SplitCertificate {
        cycle: cp.cycle_names().to_vec(),
        hypothesis_holds: violation.is_none(),
        hypothesis_violation: violation
            .map(|(a, b)| [g.name(a).to_string(), g.name(b).to_string()]),
        nonzero_parts: !j.is_zero() && !k.is_zero(),
        intersection_generators: 0,
        condition_a: false,
        condition_b: false,
        witness: None,
        verdict: Verdict::NotChecked,
        splitting_function: None,
    };
    if !cert.nonzero_parts {
        return Ok(cert);
    }
    cert.intersection_generators = intersect(&j, &k).len();

    if cert.hypothesis_holds {
        let sf = build_splitting_function(g, cp)?;
        cert.condition_a = verify_lcm_condition(&sf);
        cert.witness = verify_strict_divisibility(&sf, opts.max_verify_generators)?;
        cert.condition_b = cert.witness.is_none();
        if cert.condition_a && cert.condition_b {
            cert.verdict = Verdict::CertifiedSplitting;
            cert.splitting_function = Some(sf);
            return Ok(cert);
        }
        if !opts.search {
            return Ok(cert);
        }
    } else if !opts.search {
        return Ok(cert);
    }

    match search_splitting_function(&j, &k, opts.max_search_generators)? {
        Some(sf) => {
            cert.condition_a = true;
            cert.condition_b = true;
            cert.witness = None;
            cert.verdict = if cert.hypothesis_holds {
                Verdict::CertifiedSplitting
            } else {
                Verdict::HypothesisFailsButSplittingFound
            };
            cert.splitting_function = Some(sf);
        }
        None => {
            // lcm-valid functions exist whenever every generator has a
            // candidate; report the first one's violation
            cert.condition_a = candidate_table(&j, &k).is_ok();
            cert.condition_b = false;
            if cert.condition_a {
                let first = first_candidate_function(&j, &k)?;
                cert.witness = verify_strict_divisibility(&first, opts.max_verify_generators)?;
            }
            cert.verdict = Verdict::NoSplittingFunction;
        }
    }
    Ok(cert)
}
