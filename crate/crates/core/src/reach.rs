//! Reachability among hole nodes, kept as an `h x h` bit matrix with one
//! `u64` row per hole position (holes are logarithmic, so `h <= 64`).

use crate::meter::Meter;

#[derive(Clone, PartialEq, Eq)]
pub struct ReachMatrix {
    size: usize,
    rows: Vec<u64>,
}

impl ReachMatrix {
    pub const MAX_SIZE: usize = 64;

    pub fn new(size: usize) -> Self {
        assert!(
            size <= Self::MAX_SIZE,
            "hole of length {size} exceeds {}",
            Self::MAX_SIZE
        );
        Self {
            size,
            rows: vec![0; size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn set(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
    }

    /// Adds arc `u -> v`: `v` and everything `v` reaches become reachable
    /// from `u` and from everything reaching `u`. Closing a cycle sets a
    /// diagonal bit.
    pub fn add_arc(&mut self, u: usize, v: usize, meter: &Meter) {
        let gained = self.rows[v] | 1 << v;
        let to_u = 1u64 << u;
        for x in 0..self.size {
            if x == u || self.rows[x] & to_u != 0 {
                self.rows[x] |= gained;
            }
        }
        meter.tick((self.size * self.size) as u64);
    }

    pub fn with_arc(&self, u: usize, v: usize, meter: &Meter) -> Self {
        let mut r = self.clone();
        r.add_arc(u, v, meter);
        r
    }

    /// Some diagonal bit is set.
    pub fn is_cyclic(&self, meter: &Meter) -> bool {
        meter.tick(self.size as u64);
        (0..self.size).any(|x| self.get(x, x))
    }

    /// After the first `decided` hole edges have been folded in: whether two
    /// distinct nodes among `c_{decided+1} .. c_{h+1}` are connected one way
    /// or the other, so that the undecided edges between them can still close
    /// a cycle. Position `h` aliases position 0.
    pub fn suffix_closable(&self, decided: usize, meter: &Meter) -> bool {
        let h = self.size;
        let mut mask = 1u64; // c_{h+1} = c_1
        for p in decided.min(h)..h {
            mask |= 1 << p;
        }
        let count = mask.count_ones() as usize;
        meter.tick((count * h) as u64);
        (0..h).any(|f| mask >> f & 1 == 1 && self.rows[f] & mask & !(1 << f) != 0)
    }
}

impl std::fmt::Debug for ReachMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ReachMatrix({})", self.size)?;
        for u in 0..self.size {
            let row: String = (0..self.size)
                .map(|v| if self.get(u, v) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// Reachability between hole nodes in the directed graph `arcs` over `n`
/// nodes, by one breadth-first search per hole node. `R(i, j)` is set when a
/// non-empty directed path leads from `hole_nodes[i]` to `hole_nodes[j]`.
pub fn build_reach_matrix(
    n: usize,
    arcs: &[(usize, usize)],
    hole_nodes: &[usize],
    meter: &Meter,
) -> ReachMatrix {
    let h = hole_nodes.len();
    let mut r = ReachMatrix::new(h);
    let mut position = vec![usize::MAX; n];
    for (i, &c) in hole_nodes.iter().enumerate() {
        position[c] = i;
    }
    let mut offsets = vec![0usize; n + 1];
    for &(u, _) in arcs {
        offsets[u + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut targets = vec![0usize; arcs.len()];
    let mut fill = offsets.clone();
    for &(u, v) in arcs {
        targets[fill[u]] = v;
        fill[u] += 1;
    }
    let mut work = (n + arcs.len()) as u64;

    let mut seen = vec![usize::MAX; n];
    let mut queue = Vec::new();
    for (i, &s) in hole_nodes.iter().enumerate() {
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &y in &targets[offsets[x]..offsets[x + 1]] {
                work += 1;
                if seen[y] == i {
                    continue;
                }
                seen[y] = i;
                if position[y] != usize::MAX {
                    r.set(i, position[y]);
                }
                queue.push(y);
            }
        }
    }
    meter.tick(work);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> Meter {
        Meter::new()
    }

    #[test]
    fn no_arcs_gives_zero_matrix() {
        let r = build_reach_matrix(5, &[], &[0, 1, 2], &m());
        assert_eq!(r, ReachMatrix::new(3));
    }

    #[test]
    fn path_through_outside_node() {
        // hole c1=0, c2=1, c3=2; x=3; path c1 -> x -> c3
        let r = build_reach_matrix(4, &[(0, 3), (3, 2)], &[0, 1, 2], &m());
        assert!(r.get(0, 2));
        assert!(!r.get(2, 0));
        assert!(!r.get(0, 1));
        assert!((0..3).all(|i| !r.get(i, i)));
    }

    #[test]
    fn missing_route_stays_zero() {
        // the only c1-c2 route is a broken chain, i.e. absent from the arcs
        let r = build_reach_matrix(3, &[(2, 0)], &[0, 1], &m());
        assert!(!r.get(0, 1));
    }

    #[test]
    fn updates_close_paths() {
        let mut r = ReachMatrix::new(3);
        r.add_arc(0, 1, &m());
        r.add_arc(1, 2, &m());
        assert!(r.get(0, 1) && r.get(1, 2) && r.get(0, 2));
        assert!(!r.is_cyclic(&m()));
        let before = r.clone();
        r.add_arc(1, 2, &m());
        assert_eq!(r, before);
        r.add_arc(2, 0, &m());
        assert!(r.is_cyclic(&m()));
        assert!((0..3).all(|i| r.get(i, i)));
    }

    #[test]
    fn two_cycle_sets_both_diagonals() {
        let mut r = ReachMatrix::new(2);
        r.set(1, 0);
        r.add_arc(0, 1, &m());
        assert!(r.get(0, 0) && r.get(1, 1));
    }

    #[test]
    fn one_way_reach_is_not_cyclic() {
        let mut r = ReachMatrix::new(2);
        r.set(0, 1);
        assert!(!r.is_cyclic(&m()));
    }

    #[test]
    fn self_loop_arc_is_a_cycle() {
        let mut r = ReachMatrix::new(1);
        r.add_arc(0, 0, &m());
        assert!(r.is_cyclic(&m()));
    }

    #[test]
    fn suffix_examples() {
        let r = ReachMatrix::new(3);
        assert!(!r.suffix_closable(1, &m()));
        let mut r = ReachMatrix::new(3);
        r.set(2, 0); // R(c3, c1)
        assert!(r.suffix_closable(2, &m()));
        assert!(!r.suffix_closable(3, &m()));
        let mut r = ReachMatrix::new(3);
        r.set(0, 1); // R(c1, c2) and c2 already behind us
        assert!(!r.suffix_closable(2, &m()));
        assert!(r.suffix_closable(1, &m()));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn update_matches_transitive_closure() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let h = rng.gen_range(1..8);
            let arcs: Vec<(usize, usize)> = (0..rng.gen_range(0..10))
                .map(|_| (rng.gen_range(0..h), rng.gen_range(0..h)))
                .collect();
            let mut r = ReachMatrix::new(h);
            for &(u, v) in &arcs {
                r.add_arc(u, v, &m());
            }
            // Floyd-Warshall closure over non-empty paths
            let mut c = vec![vec![false; h]; h];
            for &(u, v) in &arcs {
                c[u][v] = true;
            }
            for k in 0..h {
                for i in 0..h {
                    for j in 0..h {
                        c[i][j] |= c[i][k] && c[k][j];
                    }
                }
            }
            for i in 0..h {
                for j in 0..h {
                    assert_eq!(r.get(i, j), c[i][j], "{arcs:?}");
                }
            }
        }
    }
}
