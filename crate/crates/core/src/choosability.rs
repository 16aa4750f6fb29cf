//! Deciding `l`-choosability of small graphs.
//!
//! Two `l`-regular assignments that differ by a renaming of colours have
//! the same colourability, so only one representative per renaming class
//! is checked. The representative is the lexicographically smallest image:
//! colours labelled `1, 2, ...` in decreasing order of their incidence
//! vectors `(c in L(0), c in L(1), ...)`. Enumeration walks lists vertex by
//! vertex in lexicographic order and keeps only prefixes already in this
//! form, so each class is produced exactly once and the stream is sorted.

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::lists::{Colour, ColourSet, ListAssignment};
use crate::peel::peel_lists;
use crate::solvers::{exact_lists, Stats};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "witness")]
pub enum Verdict {
    Choosable,
    NotChoosable(ListAssignment),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoosabilityResult {
    pub verdict: Verdict,
    pub assignments_tested: u64,
    pub ell: usize,
}

impl ChoosabilityResult {
    pub fn is_choosable(&self) -> bool {
        self.verdict == Verdict::Choosable
    }

    pub fn witness(&self) -> Option<&ListAssignment> {
        match &self.verdict {
            Verdict::NotChoosable(w) => Some(w),
            Verdict::Choosable => None,
        }
    }
}

/// Canonical `l`-regular assignments of an `n`-vertex graph over colours
/// `1..=l*n`, in lexicographic order.
#[derive(Clone, Debug)]
pub struct CanonicalAssignments {
    n: usize,
    ell: usize,
    universe: Colour,
    lists: Vec<Vec<Colour>>,
    fresh: Vec<bool>,
    /// `ties[i][a]`: labels `a` and `a + 1` have equal incidence vectors
    /// over vertices `0..i`.
    ties: Vec<Vec<bool>>,
    level: Option<usize>,
    empty_pending: bool,
}

pub fn enumerate_canonical_assignments(g: &Graph, ell: usize) -> Result<CanonicalAssignments> {
    if ell == 0 {
        return input("list size must be at least 1");
    }
    let n = g.n();
    let universe = (ell * n) as Colour;
    Ok(CanonicalAssignments {
        n,
        ell,
        universe,
        lists: vec![Vec::new(); n],
        fresh: vec![true; n],
        ties: vec![vec![true; universe as usize + 2]; n + 1],
        level: (n > 0).then_some(0),
        empty_pending: n == 0,
    })
}

impl CanonicalAssignments {
    /// Largest label used by vertices `0..i`.
    fn used_before(&self, i: usize) -> Colour {
        self.lists[..i]
            .iter()
            .filter_map(|l| l.last().copied())
            .max()
            .unwrap_or(0)
    }

    /// Moves vertex `i` to its next admissible list; `false` when exhausted.
    fn advance(&mut self, i: usize) -> bool {
        let ell = self.ell;
        let limit = self.universe.min(self.used_before(i) + ell as Colour);
        loop {
            let ok = if self.fresh[i] {
                self.fresh[i] = false;
                self.lists[i] = (1..=ell as Colour).collect();
                ell as Colour <= limit
            } else {
                next_combination(&mut self.lists[i], limit)
            };
            if !ok {
                self.fresh[i] = true;
                return false;
            }
            if self.admissible(i) {
                let tie = &self.ties[i];
                let list = &self.lists[i];
                let mut next = tie.clone();
                for a in 1..self.universe as usize {
                    let ina = list.binary_search(&(a as Colour)).is_ok();
                    let inb = list.binary_search(&(a as Colour + 1)).is_ok();
                    next[a] = tie[a] && ina == inb;
                }
                self.ties[i + 1] = next;
                return true;
            }
        }
    }

    /// Label `a + 1` may join a list without `a` only if the two were
    /// already distinguished.
    fn admissible(&self, i: usize) -> bool {
        let tie = &self.ties[i];
        let list = &self.lists[i];
        list.iter().all(|&b| {
            let a = b - 1;
            a == 0 || !tie[a as usize] || list.binary_search(&a).is_ok()
        })
    }

    fn current(&self) -> ListAssignment {
        ListAssignment::new(self.lists.iter().map(|l| ColourSet::new(l.clone())).collect())
            .expect("lists are non-empty")
    }
}

impl CanonicalAssignments {
    /// Next assignment whose prefixes all pass `keep`. `keep(lists, i)`
    /// sees the lists of vertices `0..=i`; rejecting skips every
    /// completion of that prefix.
    fn next_where(&mut self, mut keep: impl FnMut(&[Vec<Colour>], usize) -> Result<bool>) -> Result<Option<ListAssignment>> {
        if self.empty_pending {
            self.empty_pending = false;
            return Ok(Some(ListAssignment::new(Vec::new()).expect("empty assignment")));
        }
        loop {
            let Some(i) = self.level else {
                return Ok(None);
            };
            if self.advance(i) {
                if !keep(&self.lists[..=i], i)? {
                    continue;
                }
                if i + 1 == self.n {
                    return Ok(Some(self.current()));
                }
                self.level = Some(i + 1);
            } else {
                self.level = i.checked_sub(1);
            }
        }
    }
}

impl Iterator for CanonicalAssignments {
    type Item = ListAssignment;

    fn next(&mut self) -> Option<ListAssignment> {
        self.next_where(|_, _| Ok(true)).expect("no pruning, no errors")
    }
}

/// Next `k`-subset of `1..=limit` in lexicographic order.
fn next_combination(c: &mut [Colour], limit: Colour) -> bool {
    let k = c.len();
    for j in (0..k).rev() {
        let cap = limit - (k - 1 - j) as Colour;
        if c[j] < cap {
            c[j] += 1;
            for t in j + 1..k {
                c[t] = c[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Checks canonical `l`-regular assignments with the exact solver; the
/// first infeasible one is the witness. More than `budget` solver calls
/// aborts with [`Error::BudgetExceeded`].
///
/// Two reductions keep the search small. Vertices of degree below `l` are
/// peeled first; a bad assignment of the rest extends to the whole graph
/// with any lists. And if some vertex `v` lists a colour that no neighbour
/// lists while `G - v` is `l`-choosable, every colouring of `G - v`
/// extends to `v`, so every completion of such a prefix is skipped.
pub fn is_choosable(g: &Graph, ell: usize, budget: Option<u64>) -> Result<ChoosabilityResult> {
    if ell == 0 {
        return input("list size must be at least 1");
    }
    let palette = vec![ColourSet::palette(ell as Colour); g.n()];
    let (kept, _) = peel_lists(g, &palette);
    let h = g.induced(&kept);
    let mut tested = 0u64;
    let verdict = match kernel_witness(&h, ell, budget, &mut tested)? {
        None => Verdict::Choosable,
        Some(w) => {
            let top = w.universe().largest().unwrap_or(0);
            let spare: ColourSet = (top + 1..=top + ell as Colour).collect();
            let mut lists = vec![spare; g.n()];
            for (i, &v) in kept.iter().enumerate() {
                lists[v] = w.get(i).clone();
            }
            Verdict::NotChoosable(ListAssignment::new(lists)?)
        }
    };
    Ok(ChoosabilityResult {
        verdict,
        assignments_tested: tested,
        ell,
    })
}

fn kernel_witness(h: &Graph, ell: usize, budget: Option<u64>, tested: &mut u64) -> Result<Option<ListAssignment>> {
    let n = h.n();
    // vertex v can be judged once the prefix covers v and its neighbours
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in h.vertices() {
        let last = h.neighbours(v).iter().copied().chain([v]).max().expect("non-empty");
        closes[last].push(v);
    }
    let mut removable: Vec<Option<bool>> = vec![None; n];
    let mut stats = Stats::default();
    let mut it = enumerate_canonical_assignments(h, ell)?;
    let mut keep = |lists: &[Vec<Colour>], i: usize| -> Result<bool> {
        for &v in &closes[i] {
            let private = lists[v]
                .iter()
                .any(|c| h.neighbours(v).iter().all(|&w| lists[w].binary_search(c).is_err()));
            if !private {
                continue;
            }
            let rest = match removable[v] {
                Some(r) => r,
                None => {
                    let others: Vec<usize> = h.vertices().filter(|&w| w != v).collect();
                    let r = is_choosable(&h.induced(&others), ell, budget)?.is_choosable();
                    removable[v] = Some(r);
                    r
                }
            };
            if rest {
                return Ok(false);
            }
        }
        Ok(true)
    };
    while let Some(lists) = it.next_where(&mut keep)? {
        if let Some(b) = budget {
            if *tested >= b {
                return Err(Error::BudgetExceeded(b));
            }
        }
        *tested += 1;
        if exact_lists(h, lists.as_slice(), None, &mut stats)?.is_none() {
            return Ok(Some(lists));
        }
    }
    Ok(None)
}

/// Deletes vertices of degree below `l` until none is left. Such a vertex
/// can be coloured last under any `l`-regular assignment, so the verdict
/// is unchanged.
pub fn choosability_peel(g: &Graph, ell: usize) -> Graph {
    let lists = vec![ColourSet::palette(ell as Colour); g.n()];
    let (kept, _) = peel_lists(g, &lists);
    g.induced(&kept)
}
