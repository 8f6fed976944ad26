use super::{graded_betti_ideal_with, graded_betti_with, BettiOptions, BettiTable};
use crate::error::{Error, Result};
use crate::graph::{cycle_graph, make_cycle_partition, spoke_deleted_wheel, star_graph};
use crate::monomial::intersect;
use crate::splitting::{complement_ideal, cycle_ideal};

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

pub fn wheel_formula_betti(k: usize) -> Result<BettiTable> {
    wheel_formula_betti_with(k, &BettiOptions::default())
}

/// Betti numbers of the full wheel on `2k + 1` vertices from its splitting
/// into the rim cycle and the alternate-spoke star, plus the correction for
/// the remaining `k` spokes in the linear strand:
///
/// `β_{i,j}(C_{2k}) + β_{i,j}(S_k) + β_{i-1,j}(J∩K) + [j = i+2] Σ_{a=k}^{2k-1} C(a, i)`
///
/// where `J∩K = w·I(C_{2k})` is taken from the spoke-deleted wheel.
pub fn wheel_formula_betti_with(k: usize, opts: &BettiOptions) -> Result<BettiTable> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "the wheel formula needs k >= 2, got {k}"
        )));
    }
    let rim = cycle_graph(2 * k);
    let leaves: Vec<String> = (1..=k).map(|i| format!("u{}", 2 * i)).collect();
    let star = star_graph("w", &leaves);

    let partial = spoke_deleted_wheel(k);
    let cp = make_cycle_partition(&partial, rim.vertices())?;
    let jk = intersect(
        &cycle_ideal(&partial, &cp),
        &complement_ideal(&partial, &cp),
    );

    let mut t = graded_betti_with(&rim, opts)?;
    for (key, b) in graded_betti_with(&star, opts)?.entries() {
        t.add(key.0, key.1, b);
    }
    for ((i, j), b) in graded_betti_ideal_with(&jk, opts)?.entries() {
        t.add(i + 1, j, b);
    }
    for i in 0..2 * k {
        let extra: u64 = (k..2 * k).map(|a| binomial(a as u64, i as u64)).sum();
        t.add(i, i + 2, extra);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::graded_betti;
    use crate::graph::wheel_graph;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(6, 0), 1);
    }

    #[test]
    fn small_wheels_match_direct_computation() {
        for k in [2, 3] {
            assert_eq!(
                wheel_formula_betti(k).unwrap(),
                graded_betti(&wheel_graph(k)).unwrap(),
                "k = {k}"
            );
        }
    }

    #[test]
    fn k_below_two_is_rejected() {
        assert!(matches!(
            wheel_formula_betti(1),
            Err(Error::InvalidArgument(_))
        ));
        assert!(wheel_formula_betti(0).is_err());
    }
}
