//! Depth-first search for a cycle of a given length in a labeled graph that
//! uses at most a fixed number of chords (edges off `C_n`).

use crate::graph::{is_cycle_edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found,
    Exhausted,
    BudgetExceeded,
}

/// `h` must already be in label space. Returns the first cycle found, where
/// cycles are enumerated from their smallest label.
pub fn find_cycle_with_chords(
    h: &Graph,
    t: usize,
    max_chords: usize,
    budget: u64,
) -> (SearchOutcome, Option<Vec<usize>>) {
    let n = h.n();
    if t < 3 || t > n {
        return (SearchOutcome::Exhausted, None);
    }
    let mut st = State {
        h,
        n,
        t,
        max_chords,
        budget,
        steps: 0,
        path: Vec::with_capacity(t),
        on_path: vec![false; n],
    };
    for s in 0..n {
        st.path.clear();
        st.path.push(s);
        st.on_path[s] = true;
        let r = st.dfs(s, 0);
        st.on_path[s] = false;
        match r {
            SearchOutcome::Found => return (SearchOutcome::Found, Some(st.path)),
            SearchOutcome::BudgetExceeded => return (SearchOutcome::BudgetExceeded, None),
            SearchOutcome::Exhausted => {}
        }
    }
    (SearchOutcome::Exhausted, None)
}

struct State<'a> {
    h: &'a Graph,
    n: usize,
    t: usize,
    max_chords: usize,
    budget: u64,
    steps: u64,
    path: Vec<usize>,
    on_path: Vec<bool>,
}

impl State<'_> {
    fn dfs(&mut self, start: usize, chords: usize) -> SearchOutcome {
        self.steps += 1;
        if self.steps > self.budget {
            return SearchOutcome::BudgetExceeded;
        }
        let v = *self.path.last().unwrap();
        let n = self.n;
        if self.path.len() == self.t {
            let closing = usize::from(!is_cycle_edge(v, start, n));
            if self.h.has_edge(v, start) && chords + closing <= self.max_chords {
                return SearchOutcome::Found;
            }
            return SearchOutcome::Exhausted;
        }
        // cycle edges first, then chords in increasing label order
        let cyc = [(v + 1) % n, (v + n - 1) % n];
        for w in cyc {
            if w > start && !self.on_path[w] && self.h.has_edge(v, w) {
                match self.step(start, w, chords) {
                    SearchOutcome::Exhausted => {}
                    r => return r,
                }
            }
        }
        if chords < self.max_chords {
            let ws: Vec<usize> = self
                .h
                .neighbors(v)
                .filter(|&w| w > start && !self.on_path[w] && !is_cycle_edge(v, w, n))
                .collect();
            for w in ws {
                match self.step(start, w, chords + 1) {
                    SearchOutcome::Exhausted => {}
                    r => return r,
                }
            }
        }
        SearchOutcome::Exhausted
    }

    fn step(&mut self, start: usize, w: usize, chords: usize) -> SearchOutcome {
        self.path.push(w);
        self.on_path[w] = true;
        let r = self.dfs(start, chords);
        if r != SearchOutcome::Found {
            self.on_path[w] = false;
            self.path.pop();
        }
        r
    }
}
