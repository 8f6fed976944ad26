//! Graded Betti numbers of square-free monomial ideals by Hochster's
//! formula, the Eliahou-Kervaire comparison for a splitting, and the wheel
//! closed form.
//!
//! `β_{i,j}(I) = Σ_{|W| = j} dim H̃_{j-i-2}(Δ_W)` where `Δ` is the
//! Stanley-Reisner complex of `I` and `Δ_W` its restriction to `W`.

mod ek;
mod render;
mod table;
mod wheel;

pub use ek::{
    ek_check, ek_check_ideals, ek_check_with, EkColumn, EkGradedEntry, EkReport, EkTables,
};
pub use render::render_paper_table;
pub use table::{total_betti, BettiTable};
pub use wheel::{wheel_formula_betti, wheel_formula_betti_with};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{homology_of_faces, RankMethod};
use crate::monomial::{edge_ideal, MonomialIdeal, VarIndex};

pub const DEFAULT_MAX_VARS: usize = 14;

#[derive(Clone, Copy, Debug)]
pub struct BettiOptions {
    /// Refuse ideals in more variables than this.
    pub max_vars: usize,
    pub method: RankMethod,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            max_vars: DEFAULT_MAX_VARS,
            method: RankMethod::default(),
        }
    }
}

pub fn graded_betti(g: &Graph) -> Result<BettiTable> {
    graded_betti_with(g, &BettiOptions::default())
}

/// Betti numbers of the edge ideal. Isolated vertices do not affect them
/// and do not count towards the cap.
pub fn graded_betti_with(g: &Graph, opts: &BettiOptions) -> Result<BettiTable> {
    graded_betti_ideal_with(&edge_ideal(g), opts)
}

pub fn graded_betti_ideal(ideal: &MonomialIdeal) -> Result<BettiTable> {
    graded_betti_ideal_with(ideal, &BettiOptions::default())
}

/// Betti numbers of a square-free ideal over the variables it uses.
pub fn graded_betti_ideal_with(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<BettiTable> {
    let vars = VarIndex::new(ideal.variables())?;
    let n = vars.len();
    if n > opts.max_vars {
        return Err(Error::CapExceeded {
            what: "variables for Betti computation",
            limit: opts.max_vars,
            actual: n,
        });
    }
    let gens: Vec<u64> = ideal.generators().iter().map(|g| vars.mask(g)).collect();
    let method = opts.method;
    let partial: Vec<Vec<((usize, usize), u64)>> = (1u64..1 << n)
        .into_par_iter()
        .map(|w| subset_contribution(&gens, w, method))
        .collect();
    Ok(BettiTable::from_entries(partial.into_iter().flatten()))
}

/// Contributions of one vertex subset `w` to the Hochster sum.
fn subset_contribution(gens: &[u64], w: u64, method: RankMethod) -> Vec<((usize, usize), u64)> {
    let j = w.count_ones() as usize;
    if j < 2 {
        return Vec::new();
    }
    let inside: Vec<u64> = gens.iter().copied().filter(|&g| g & !w == 0).collect();
    let covered = inside.iter().fold(0u64, |acc, &g| acc | g);
    if covered != w {
        // some vertex of w lies in no generator: Δ_W is a cone
        return Vec::new();
    }
    let mut faces = Vec::new();
    let mut f = w;
    loop {
        if inside.iter().all(|&g| g & !f != 0) {
            faces.push(f);
        }
        if f == 0 {
            break;
        }
        f = (f - 1) & w;
    }
    faces.sort_by_key(|m| (m.count_ones(), *m));
    let h = homology_of_faces(&faces, method);
    h.nonzero()
        .filter_map(|(d, rank)| {
            let i = j as isize - d - 2;
            (i >= 0).then_some(((i as usize, j), rank as u64))
        })
        .collect()
}
