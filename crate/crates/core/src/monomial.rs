//! Square-free monomials and monomial ideals.
//!
//! A square-free monomial is identified with its support, so lcm is union
//! and divisibility is inclusion. Ideals are stored by their minimal
//! generating set in canonical order: by degree, then lexicographically on
//! the sorted support.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(BTreeSet<String>);

impl Monomial {
    /// The constant monomial 1.
    pub fn one() -> Self {
        Monomial(BTreeSet::new())
    }

    /// Repeated variables collapse, as square-free monomials.
    pub fn new<I, S>(vars: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Monomial(vars.into_iter().map(Into::into).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn support(&self) -> &BTreeSet<String> {
        &self.0
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn contains(&self, var: &str) -> bool {
        self.0.contains(var)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.union(&other.0).cloned().collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn strictly_divides(&self, other: &Monomial) -> bool {
        self.0.len() < other.0.len() && self.0.is_subset(&other.0)
    }
}

pub fn lcm(a: &Monomial, b: &Monomial) -> Monomial {
    a.lcm(b)
}

pub fn lcm_all<'a>(ms: impl IntoIterator<Item = &'a Monomial>) -> Monomial {
    Monomial(ms.into_iter().flat_map(|m| m.0.iter().cloned()).collect())
}

pub fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.divides(b)
}

pub fn strictly_divides(a: &Monomial, b: &Monomial) -> bool {
    a.strictly_divides(b)
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, v) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            f.write_str(v)?;
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `u1*u2*w1` or `u1 u2 w1`. Exponents other than 1 and repeated
/// variables are rejected.
pub fn parse_monomial(text: &str) -> Result<Monomial> {
    let mut vars = BTreeSet::new();
    let tokens: Vec<&str> = text
        .split(|c: char| c == '*' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(Error::BadMonomial(text.to_string()));
    }
    for tok in tokens {
        let var = match tok.split_once('^') {
            None => tok,
            Some((v, "1")) => v,
            Some((_, e)) if e.parse::<u32>().is_ok() => {
                return Err(Error::NotSquareFree(text.trim().to_string()))
            }
            Some(_) => return Err(Error::BadMonomial(text.trim().to_string())),
        };
        if var.is_empty() || var.contains(|c: char| ",<>()".contains(c)) {
            return Err(Error::BadMonomial(text.trim().to_string()));
        }
        if !vars.insert(var.to_string()) {
            return Err(Error::NotSquareFree(text.trim().to_string()));
        }
    }
    Ok(Monomial(vars))
}

/// A monomial ideal given by its minimal generators. No generators means the
/// zero ideal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_generator(&self, m: &Monomial) -> bool {
        self.gens.binary_search(m).is_ok()
    }

    pub fn member(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Every variable that occurs in some generator, sorted.
    pub fn variables(&self) -> BTreeSet<String> {
        self.gens.iter().flat_map(|g| g.0.iter().cloned()).collect()
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        intersect(self, other)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(|m| m.to_string()).collect();
        format!("<{}>", parts.join(", "))
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.gens.iter().map(|m| m.0.iter().collect::<Vec<_>>()))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The unique antichain generating the same ideal as `ms`.
pub fn minimalize<I: IntoIterator<Item = Monomial>>(ms: I) -> MonomialIdeal {
    let distinct: BTreeSet<Monomial> = ms.into_iter().collect();
    // canonical order is by degree, so any strict divisor of m comes before m
    let mut gens: Vec<Monomial> = Vec::with_capacity(distinct.len());
    for m in distinct {
        if !gens.iter().any(|g| g.strictly_divides(&m)) {
            gens.push(m);
        }
    }
    MonomialIdeal { gens }
}

pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    minimalize(g.edge_names().map(|(a, b)| Monomial::new([a, b])))
}

/// Minimal generators of the intersection: all pairwise lcms, minimalized.
pub fn intersect(j: &MonomialIdeal, k: &MonomialIdeal) -> MonomialIdeal {
    minimalize(
        j.gens
            .iter()
            .flat_map(|f| k.gens.iter().map(move |g| f.lcm(g))),
    )
}

pub fn member(i: &MonomialIdeal, m: &Monomial) -> bool {
    i.member(m)
}

/// Parses `<m1, m2, ...>`; the angle brackets are optional. An empty list
/// is the zero ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let t = text.trim();
    let inner = match (t.strip_prefix('<'), t.ends_with('>')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => t,
        _ => return Err(Error::BadMonomial(t.to_string())),
    };
    if inner.trim().is_empty() {
        return Ok(MonomialIdeal::zero());
    }
    let ms = inner
        .split(',')
        .map(parse_monomial)
        .collect::<Result<Vec<_>>>()?;
    Ok(minimalize(ms))
}

/// Parses the JSON form: a list of lists of variable names.
pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let lists: Vec<Vec<String>> = serde_json::from_str(text)?;
    let mut ms = Vec::with_capacity(lists.len());
    for l in lists {
        let m = Monomial::new(l.iter().cloned());
        if m.degree() != l.len() {
            return Err(Error::NotSquareFree(l.join("*")));
        }
        if m.degree() == 0 {
            return Err(Error::BadMonomial("[]".into()));
        }
        ms.push(m);
    }
    Ok(minimalize(ms))
}

/// Assigns bit positions to variable names for mask-level computations.
#[derive(Clone, Debug)]
pub(crate) struct VarIndex {
    names: Vec<String>,
    map: HashMap<String, usize>,
}

impl VarIndex {
    pub(crate) fn new<I, S>(vars: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut names = Vec::new();
        let mut map = HashMap::new();
        for v in vars {
            let v = v.as_ref();
            if !map.contains_key(v) {
                map.insert(v.to_string(), names.len());
                names.push(v.to_string());
            }
        }
        if names.len() > 64 {
            return Err(Error::CapExceeded {
                what: "variable count",
                limit: 64,
                actual: names.len(),
            });
        }
        Ok(VarIndex { names, map })
    }

    pub(crate) fn len(&self) -> usize {
        self.names.len()
    }

    pub(crate) fn mask(&self, m: &Monomial) -> u64 {
        m.vars().fold(0, |acc, v| acc | 1 << self.map[v])
    }
}
