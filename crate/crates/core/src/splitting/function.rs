use std::collections::HashSet;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::abc::{abc_decomposition, complement_ideal, cycle_ideal, edge_monomial};
use crate::error::{Error, Result};
use crate::graph::{hypothesis_violation, CyclePartition, Graph};
use crate::monomial::{intersect, lcm_all, Monomial, MonomialIdeal, VarIndex};

pub const DEFAULT_VERIFY_LIMIT: usize = 20;
pub const DEFAULT_SEARCH_LIMIT: usize = 12;

/// A pair `(phi, psi)` with `lcm(phi, psi) = w`.
pub type Candidate = (Monomial, Monomial);

/// Masks of `w`, `phi(w)` and `psi(w)` per assignment.
type DomainMasks = (Vec<u64>, Vec<u64>, Vec<u64>, VarIndex);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub w: Monomial,
    pub phi: Monomial,
    pub psi: Monomial,
}

/// A map `w -> (phi(w), psi(w))` from the minimal generators of `J ∩ K`
/// into `G(J) x G(K)`, kept in canonical order of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingFunction {
    j: MonomialIdeal,
    k: MonomialIdeal,
    assignments: Vec<Assignment>,
}

impl SplittingFunction {
    pub fn new(j: MonomialIdeal, k: MonomialIdeal, mut assignments: Vec<Assignment>) -> Self {
        assignments.sort_by(|a, b| a.w.cmp(&b.w));
        SplittingFunction { j, k, assignments }
    }

    pub fn j(&self) -> &MonomialIdeal {
        &self.j
    }

    pub fn k(&self) -> &MonomialIdeal {
        &self.k
    }

    pub fn assignments(&self) -> &[Assignment] {
        &self.assignments
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn get(&self, w: &Monomial) -> Option<&Assignment> {
        self.assignments
            .binary_search_by(|a| a.w.cmp(w))
            .ok()
            .map(|i| &self.assignments[i])
    }

    fn masks(&self) -> Result<DomainMasks> {
        let vars = VarIndex::new(
            self.assignments
                .iter()
                .flat_map(|a| a.w.vars().chain(a.phi.vars()).chain(a.psi.vars())),
        )?;
        let ws = self.assignments.iter().map(|a| vars.mask(&a.w)).collect();
        let phis = self.assignments.iter().map(|a| vars.mask(&a.phi)).collect();
        let psis = self.assignments.iter().map(|a| vars.mask(&a.psi)).collect();
        Ok((ws, phis, psis, vars))
    }
}

/// Serialized as a list of `[w, phi, psi]` triples.
impl Serialize for SplittingFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.assignments.len()))?;
        for a in &self.assignments {
            seq.serialize_element(&(&a.w, &a.phi, &a.psi))?;
        }
        seq.end()
    }
}

/// The explicit splitting function for a cycle with no two adjacent
/// vertices of degree above 2:
///
/// * `u_i u_{i+1} w_p` in A maps to `(u_i u_{i+1}, u_i w_p)` or
///   `(u_i u_{i+1}, u_{i+1} w_p)`, whichever crossing edge exists,
/// * `u_i u_{i+1} u_j w_p` in B maps to `(u_i u_{i+1}, u_j w_p)`,
/// * `u_i u_{i+1} w_p w_q` in C maps to `(u_i u_{i+1}, w_p w_q)`.
pub fn build_splitting_function(g: &Graph, cp: &CyclePartition) -> Result<SplittingFunction> {
    if let Some((a, b)) = hypothesis_violation(g, cp) {
        return Err(Error::HypothesisViolated(
            g.name(a).to_string(),
            g.name(b).to_string(),
        ));
    }
    let j = cycle_ideal(g, cp);
    let k = complement_ideal(g, cp);
    if k.is_zero() {
        return Err(Error::ZeroComplement);
    }
    let abc = abc_decomposition(g, cp)?;
    let idx = |name: &str| g.index_of(name).expect("monomial variables are vertices");

    // cycle edge inside w: the unique pair of cycle variables at adjacent
    // positions
    let cycle_edge_in = |w: &Monomial| -> Result<(usize, usize)> {
        let on_cycle: Vec<usize> = w
            .vars()
            .map(idx)
            .filter(|&v| cp.position(v).is_some())
            .collect();
        let mut found = None;
        for &x in &on_cycle {
            for &y in &on_cycle {
                let (px, py) = (cp.position(x).unwrap(), cp.position(y).unwrap());
                if (px + 1) % cp.k() == py {
                    if found.is_some() {
                        return Err(Error::UnclassifiedGenerator(w.to_string()));
                    }
                    found = Some((x, y));
                }
            }
        }
        found.ok_or_else(|| Error::UnclassifiedGenerator(w.to_string()))
    };

    let mut assignments = Vec::with_capacity(abc.len());
    for w in &abc.a {
        let (ui, uj) = cycle_edge_in(w)?;
        let wp = w
            .vars()
            .map(idx)
            .find(|&v| cp.position(v).is_none())
            .ok_or_else(|| Error::UnclassifiedGenerator(w.to_string()))?;
        let psi = match (g.has_edge(ui, wp), g.has_edge(uj, wp)) {
            (true, false) => edge_monomial(g, (ui, wp)),
            (false, true) => edge_monomial(g, (uj, wp)),
            (true, true) => return Err(Error::AmbiguousAssignment(w.to_string())),
            (false, false) => return Err(Error::UnclassifiedGenerator(w.to_string())),
        };
        assignments.push(Assignment {
            w: w.clone(),
            phi: edge_monomial(g, (ui, uj)),
            psi,
        });
    }
    for w in abc.b.iter().chain(&abc.c) {
        let (ui, uj) = cycle_edge_in(w)?;
        let rest = w.vars().filter(|&v| {
            let v = idx(v);
            v != ui && v != uj
        });
        assignments.push(Assignment {
            w: w.clone(),
            phi: edge_monomial(g, (ui, uj)),
            psi: Monomial::new(rest),
        });
    }
    Ok(SplittingFunction::new(j, k, assignments))
}

/// The lcm condition: `lcm(phi(w), psi(w)) = w` for every `w`, with
/// `phi(w) ∈ G(J)`, `psi(w) ∈ G(K)`, and the domain exactly `G(J ∩ K)`.
pub fn verify_lcm_condition(sf: &SplittingFunction) -> bool {
    let domain = intersect(&sf.j, &sf.k);
    if domain.len() != sf.assignments.len() {
        return false;
    }
    sf.assignments
        .iter()
        .zip(domain.generators())
        .all(|(a, w)| {
            &a.w == w
                && a.phi.lcm(&a.psi) == a.w
                && sf.j.is_generator(&a.phi)
                && sf.k.is_generator(&a.psi)
        })
}

/// A subset `S` of the domain together with the three lcms involved in the
/// strict divisibility condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetCheck {
    pub subset: Vec<Monomial>,
    pub lcm: Monomial,
    pub lcm_phi: Monomial,
    pub lcm_psi: Monomial,
    pub phi_strict: bool,
    pub psi_strict: bool,
}

impl SubsetCheck {
    pub fn passes(&self) -> bool {
        self.phi_strict && self.psi_strict
    }
}

/// Evaluates the strict divisibility condition on one subset of the domain.
pub fn check_subset(sf: &SplittingFunction, subset: &[Monomial]) -> Result<SubsetCheck> {
    let mut chosen = Vec::with_capacity(subset.len());
    for w in subset {
        let a = sf
            .get(w)
            .ok_or_else(|| Error::InvalidArgument(format!("{w} is not in the domain")))?;
        chosen.push(a);
    }
    let lcm = lcm_all(chosen.iter().map(|a| &a.w));
    let lcm_phi = lcm_all(chosen.iter().map(|a| &a.phi));
    let lcm_psi = lcm_all(chosen.iter().map(|a| &a.psi));
    Ok(SubsetCheck {
        subset: chosen.iter().map(|a| a.w.clone()).collect(),
        phi_strict: lcm_phi.strictly_divides(&lcm),
        psi_strict: lcm_psi.strictly_divides(&lcm),
        lcm,
        lcm_phi,
        lcm_psi,
    })
}

fn strict(sub: u64, sup: u64) -> bool {
    sub & !sup == 0 && sub != sup
}

/// Lexicographically least violating subset (as sorted index lists) whose
/// smallest element is `first`, by preorder depth-first search.
///
/// Subsets sharing the same three lcms and the same next index have the
/// same extensions, so states known to lead nowhere are skipped.
fn first_violation_from(
    first: usize,
    ws: &[u64],
    phis: &[u64],
    psis: &[u64],
) -> Option<Vec<usize>> {
    struct Search<'a> {
        ws: &'a [u64],
        phis: &'a [u64],
        psis: &'a [u64],
        dead: HashSet<(u64, u64, u64, usize)>,
        path: Vec<usize>,
    }

    impl Search<'_> {
        fn visit(&mut self, (lw, lphi, lpsi): (u64, u64, u64)) -> bool {
            if !(strict(lphi, lw) && strict(lpsi, lw)) {
                return true;
            }
            let start = self.path.last().unwrap() + 1;
            if self.dead.contains(&(lw, lphi, lpsi, start)) {
                return false;
            }
            for next in start..self.ws.len() {
                self.path.push(next);
                let acc = (
                    lw | self.ws[next],
                    lphi | self.phis[next],
                    lpsi | self.psis[next],
                );
                if self.visit(acc) {
                    return true;
                }
                self.path.pop();
            }
            self.dead.insert((lw, lphi, lpsi, start));
            false
        }
    }

    let mut search = Search {
        ws,
        phis,
        psis,
        dead: HashSet::new(),
        path: vec![first],
    };
    search
        .visit((ws[first], phis[first], psis[first]))
        .then_some(search.path)
}

/// Checks the strict divisibility condition on every nonempty subset of the
/// domain. Returns `None` when it holds, or the lexicographically least
/// violating subset (by canonical order of its elements) as witness.
///
/// Refuses domains larger than `max_generators` rather than sampling.
pub fn verify_strict_divisibility(
    sf: &SplittingFunction,
    max_generators: usize,
) -> Result<Option<SubsetCheck>> {
    let n = sf.assignments.len();
    if n > max_generators {
        return Err(Error::CapExceeded {
            what: "generators of J∩K for subset enumeration",
            limit: max_generators,
            actual: n,
        });
    }
    let (ws, phis, psis, _) = sf.masks()?;
    let witness = (0..n)
        .into_par_iter()
        .find_map_first(|first| first_violation_from(first, &ws, &phis, &psis));
    match witness {
        None => Ok(None),
        Some(idx) => {
            let subset: Vec<Monomial> = idx.iter().map(|&i| sf.assignments[i].w.clone()).collect();
            check_subset(sf, &subset).map(Some)
        }
    }
}

/// Every pair `(f, g)` in `G(J) x G(K)` with `lcm(f, g) = w`, in canonical
/// order.
pub fn lcm_candidates(j: &MonomialIdeal, k: &MonomialIdeal, w: &Monomial) -> Vec<Candidate> {
    let mut out = Vec::new();
    for f in j.generators().iter().filter(|f| f.divides(w)) {
        for g in k.generators().iter().filter(|g| g.divides(w)) {
            if &f.lcm(g) == w {
                out.push((f.clone(), g.clone()));
            }
        }
    }
    out
}

/// Candidate lists for the whole domain; errors if some generator has none.
pub fn candidate_table(
    j: &MonomialIdeal,
    k: &MonomialIdeal,
) -> Result<Vec<(Monomial, Vec<Candidate>)>> {
    intersect(j, k)
        .generators()
        .iter()
        .map(|w| {
            let c = lcm_candidates(j, k, w);
            if c.is_empty() {
                Err(Error::NoCandidates(w.to_string()))
            } else {
                Ok((w.clone(), c))
            }
        })
        .collect()
}

/// The function that takes the first lcm candidate for every generator.
pub fn first_candidate_function(j: &MonomialIdeal, k: &MonomialIdeal) -> Result<SplittingFunction> {
    let table = candidate_table(j, k)?;
    let assignments = table
        .into_iter()
        .map(|(w, c)| {
            let (phi, psi) = c.into_iter().next().expect("nonempty candidates");
            Assignment { w, phi, psi }
        })
        .collect();
    Ok(SplittingFunction::new(j.clone(), k.clone(), assignments))
}

/// Exhaustive search for a splitting function of `J + K`.
///
/// Every choice satisfies the lcm condition by construction; backtracking
/// prunes a partial assignment as soon as some subset of the assigned
/// generators violates strict divisibility. Returns the first function in
/// candidate order, or `None` when no function exists.
pub fn search_splitting_function(
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    max_generators: usize,
) -> Result<Option<SplittingFunction>> {
    let domain = intersect(j, k);
    if domain.len() > max_generators {
        return Err(Error::CapExceeded {
            what: "generators of J∩K for splitting-function search",
            limit: max_generators,
            actual: domain.len(),
        });
    }
    let table = candidate_table(j, k)?;
    let vars = VarIndex::new(domain.variables())?;
    let ws: Vec<u64> = table.iter().map(|(w, _)| vars.mask(w)).collect();
    let choices: Vec<Vec<(u64, u64)>> = table
        .iter()
        .map(|(_, c)| {
            c.iter()
                .map(|(f, g)| (vars.mask(f), vars.mask(g)))
                .collect()
        })
        .collect();

    // lcm tables over subsets of the assigned prefix, indexed by bitmask
    let mut lw = vec![0u64];
    let mut lphi = vec![0u64];
    let mut lpsi = vec![0u64];
    let mut picked = Vec::with_capacity(ws.len());

    fn descend(
        t: usize,
        ws: &[u64],
        choices: &[Vec<(u64, u64)>],
        lw: &mut Vec<u64>,
        lphi: &mut Vec<u64>,
        lpsi: &mut Vec<u64>,
        picked: &mut Vec<usize>,
    ) -> bool {
        if t == ws.len() {
            return true;
        }
        let half = lw.len();
        for (c, &(fm, gm)) in choices[t].iter().enumerate() {
            let mut ok = true;
            for s in 0..half {
                let (a, b, d) = (lw[s] | ws[t], lphi[s] | fm, lpsi[s] | gm);
                if !(strict(b, a) && strict(d, a)) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            for s in 0..half {
                lw.push(lw[s] | ws[t]);
                lphi.push(lphi[s] | fm);
                lpsi.push(lpsi[s] | gm);
            }
            picked.push(c);
            if descend(t + 1, ws, choices, lw, lphi, lpsi, picked) {
                return true;
            }
            picked.pop();
            lw.truncate(half);
            lphi.truncate(half);
            lpsi.truncate(half);
        }
        false
    }

    if !descend(0, &ws, &choices, &mut lw, &mut lphi, &mut lpsi, &mut picked) {
        return Ok(None);
    }
    let assignments = table
        .into_iter()
        .zip(picked)
        .map(|((w, c), p)| {
            let (phi, psi) = c[p].clone();
            Assignment { w, phi, psi }
        })
        .collect();
    Ok(Some(SplittingFunction::new(
        j.clone(),
        k.clone(),
        assignments,
    )))
}
