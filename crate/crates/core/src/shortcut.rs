//! `l`-shortcuts: four chords in one of two clockwise patterns which, together
//! with `C_n`, close cycles of lengths `l + 8` and `n - l`.

use serde::{Deserialize, Serialize};

use crate::certificate::{clockwise, CycleCertificate};
use crate::error::{Error, Result};
use crate::graph::Edge;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    I,
    II,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shortcut {
    pub variant: Variant,
    pub i1: usize,
    pub i2: usize,
    pub i3: usize,
    pub i4: usize,
    pub l: usize,
}

impl Shortcut {
    pub fn new(variant: Variant, [i1, i2, i3, i4]: [usize; 4], l: usize) -> Self {
        Shortcut {
            variant,
            i1,
            i2,
            i3,
            i4,
            l,
        }
    }

    /// The eight marker points in the clockwise order the variant demands.
    pub fn points(&self, n: usize) -> [usize; 8] {
        let s = |x: usize, d: usize| (x + d) % n;
        let (i1, i2, i3, i4, l) = (self.i1 % n, self.i2 % n, self.i3 % n, self.i4 % n, self.l);
        match self.variant {
            Variant::I => [i1, s(i1, 1), i2, s(i2, 1), i3, s(i3, 1), i4, s(i4, l + 1)],
            Variant::II => [i1, s(i1, 1), i2, s(i2, 1), i4, s(i4, l + 1), i3, s(i3, 1)],
        }
    }

    /// `{i1,i3}, {i1+1,i4}, {i2,i4+l+1}, {i2+1,i3+1}`.
    pub fn edges(&self, n: usize) -> [Edge; 4] {
        let s = |x: usize, d: usize| (x + d) % n;
        [
            Edge::new(self.i1 % n, self.i3 % n),
            Edge::new(s(self.i1, 1), self.i4 % n),
            Edge::new(self.i2 % n, s(self.i4, self.l + 1)),
            Edge::new(s(self.i2, 1), s(self.i3, 1)),
        ]
    }
}

/// Builds the shortcut whose arcs between consecutive marker points carry
/// `gaps = [a, b, c]` extra vertices (the last arc takes the remaining slack).
/// Returns `None` when the gaps do not fit into `n`.
pub fn shortcut_from_gaps(
    variant: Variant,
    n: usize,
    i1: usize,
    l: usize,
    [a, b, c]: [usize; 3],
) -> Option<Shortcut> {
    if 8 + l + a + b + c > n || 2 * l > n {
        return None;
    }
    let at = |off: usize| (i1 + off) % n;
    let s = match variant {
        Variant::I => Shortcut::new(
            variant,
            [at(0), at(2 + a), at(4 + a + b), at(6 + a + b + c)],
            l,
        ),
        Variant::II => Shortcut::new(
            variant,
            [at(0), at(2 + a), at(6 + a + b + l + c), at(4 + a + b)],
            l,
        ),
    };
    debug_assert!(validate_shortcut(&s, n));
    Some(s)
}

/// A uniformly placed valid shortcut, or `None` if `l` leaves no room.
pub fn random_shortcut<R: rand::Rng>(
    rng: &mut R,
    variant: Variant,
    n: usize,
    l: usize,
) -> Option<Shortcut> {
    if n < 8 + l || 2 * l > n {
        return None;
    }
    let slack = n - 8 - l;
    // stars and bars over the four free arcs
    let mut cuts = [
        rng.gen_range(0..=slack),
        rng.gen_range(0..=slack),
        rng.gen_range(0..=slack),
    ];
    cuts.sort_unstable();
    let gaps = [cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1]];
    shortcut_from_gaps(variant, n, rng.gen_range(0..n), l, gaps)
}

/// True iff the eight points are distinct and lie clockwise in the variant's order.
pub fn validate_shortcut(s: &Shortcut, n: usize) -> bool {
    if n < 8 || 2 * s.l > n || [s.i1, s.i2, s.i3, s.i4].iter().any(|&x| x >= n) {
        return false;
    }
    let pts = s.points(n);
    // offsets from the first point must strictly increase
    let offsets = pts.map(|p| (p + n - pts[0]) % n);
    offsets.windows(2).all(|w| w[0] < w[1])
}

/// Explicit cycles of lengths `l + 8` and `n - l` in `C_n` plus the shortcut.
pub fn cycles_from_shortcut(
    s: &Shortcut,
    n: usize,
) -> Result<(CycleCertificate, CycleCertificate)> {
    if !validate_shortcut(s, n) {
        return Err(Error::InvalidShortcut(format!(
            "{s:?} is not a valid shortcut for n = {n}"
        )));
    }
    let succ = |x: usize, d: usize| (x + d) % n;
    let (i1, i2, i3, i4, l) = (s.i1, s.i2, s.i3, s.i4, s.l);
    let far = succ(i4, l + 1);

    // i1 - i3 - i3+1 - i2+1 - i2 - (i4+l+1 back to i4) - i1+1
    let mut short = vec![i1, i3, succ(i3, 1), succ(i2, 1), i2];
    short.extend(clockwise(i4, far, n).into_iter().rev());
    short.push(succ(i1, 1));

    let mut long = clockwise(succ(i1, 1), i2, n);
    match s.variant {
        Variant::I => {
            long.extend(clockwise(far, i1, n));
            long.extend(clockwise(succ(i2, 1), i3, n).into_iter().rev());
            long.extend(clockwise(succ(i3, 1), i4, n));
        }
        Variant::II => {
            long.extend(clockwise(far, i3, n));
            long.extend(clockwise(succ(i3, 1), i1, n).into_iter().rev());
            long.extend(clockwise(succ(i2, 1), i4, n));
        }
    }
    debug_assert_eq!(short.len(), l + 8);
    debug_assert_eq!(long.len(), n - l);
    Ok((
        CycleCertificate::from_cycle(short, n),
        CycleCertificate::from_cycle(long, n),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::graph::{CycleLabeling, Graph};
    use crate::testutil::cycle_lengths;
    use proptest::prelude::*;

    fn host(s: &Shortcut, n: usize) -> Graph {
        let mut g = Graph::cycle(n).unwrap();
        for e in s.edges(n) {
            g.add_edge(e.0, e.1);
        }
        g
    }

    #[test]
    fn validation_examples() {
        assert!(validate_shortcut(
            &Shortcut::new(Variant::I, [0, 4, 8, 14], 0),
            20
        ));
        assert!(!validate_shortcut(
            &Shortcut::new(Variant::I, [0, 1, 8, 14], 0),
            20
        ));
        // 0,1,4,5,9,13,17,18 is clockwise
        assert!(validate_shortcut(
            &Shortcut::new(Variant::II, [0, 4, 17, 9], 3),
            20
        ));
        assert!(!validate_shortcut(
            &Shortcut::new(Variant::II, [0, 4, 10, 9], 3),
            20
        ));
        assert!(!validate_shortcut(
            &Shortcut::new(Variant::I, [0, 4, 8, 14], 11),
            20
        ));
    }

    #[test]
    fn variant_one_example_routing() {
        let s = Shortcut::new(Variant::I, [0, 4, 8, 14], 0);
        let (short, long) = cycles_from_shortcut(&s, 20).unwrap();
        assert_eq!(short.vertices, vec![0, 8, 9, 5, 4, 15, 14, 1]);
        assert_eq!(long.t, 20);
        let g = host(&s, 20);
        let id = CycleLabeling::identity(20);
        assert!(verify_certificate(&g, &id, &short));
        assert!(verify_certificate(&g, &id, &long));
        assert_eq!(short.extra_count(), 4);
        assert_eq!(long.extra_count(), 4);
    }

    #[test]
    fn invalid_shortcut_rejected() {
        let s = Shortcut::new(Variant::I, [0, 1, 8, 14], 0);
        assert!(cycles_from_shortcut(&s, 20).is_err());
    }

    #[test]
    fn brute_force_agrees_on_small_hosts() {
        // every valid shortcut for n <= 14: the host contains both claimed lengths
        for n in 8..=14 {
            for variant in [Variant::I, Variant::II] {
                for l in 0..=n / 2 {
                    for i2 in 0..n {
                        for i3 in 0..n {
                            for i4 in 0..n {
                                let s = Shortcut::new(variant, [0, i2, i3, i4], l);
                                if !validate_shortcut(&s, n) {
                                    continue;
                                }
                                let (a, b) = cycles_from_shortcut(&s, n).unwrap();
                                let g = host(&s, n);
                                let lens = cycle_lengths(&g);
                                assert!(lens.contains(&(l + 8)) && lens.contains(&(n - l)));
                                let id = CycleLabeling::identity(n);
                                assert!(verify_certificate(&g, &id, &a));
                                assert!(verify_certificate(&g, &id, &b));
                            }
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn lengths_are_exact(n in 8usize..80, v in any::<bool>(), i1 in 0usize..80, fr in proptest::collection::vec(0.0f64..1.0, 4)) {
            let variant = if v { Variant::I } else { Variant::II };
            let l = ((n / 2).min(n - 8) as f64 * fr[0]) as usize;
            let slack = (n - 8 - l) as f64;
            let gaps = [(slack * fr[1] / 3.0) as usize, (slack * fr[2] / 3.0) as usize, (slack * fr[3] / 3.0) as usize];
            let s = shortcut_from_gaps(variant, n, i1 % n, l, gaps).unwrap();
            prop_assert!(validate_shortcut(&s, n));
            let (a, b) = cycles_from_shortcut(&s, n).unwrap();
            prop_assert_eq!(a.t, s.l + 8);
            prop_assert_eq!(b.t, n - s.l);
            let g = host(&s, n);
            let id = CycleLabeling::identity(n);
            prop_assert!(verify_certificate(&g, &id, &a));
            prop_assert!(verify_certificate(&g, &id, &b));
        }
    }
}
