//! Ranked posets of intersection flats with Möbius function and
//! characteristic polynomial.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exact::{int, Int, IntPolynomial, Rref};
use crate::{Error, Result};

/// One flat. `witness` carries solved row-echelon data for the subspace when
/// the poset comes from a linear arrangement; combinatorially built posets
/// (toric components) leave it empty and identify the flat by `label`.
#[derive(Debug, Clone)]
pub struct PosetNode {
    pub dim: usize,
    pub label: String,
    pub witness: Option<Rref>,
    pub mobius: Int,
}

/// Poset ordered by reverse inclusion of flats: the bottom element is the
/// ambient space and dimension strictly decreases upward. Built from its
/// cover relations; Möbius values are filled in by the recursion
/// mu(bottom) = 1, mu(x) = -sum of mu over everything strictly below x.
#[derive(Debug, Clone)]
pub struct RankedPoset {
    nodes: Vec<PosetNode>,
    covers: Vec<(usize, usize)>,
    bottom: usize,
    below: Vec<Vec<u64>>,
}

fn bit_get(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

fn bit_or(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

impl RankedPoset {
    /// `items` lists (dimension, label, witness) per element; `covers` holds
    /// pairs (lower, upper) with `lower` covered by `upper`.
    pub fn from_covers(
        items: Vec<(usize, String, Option<Rref>)>,
        covers: Vec<(usize, usize)>,
        bottom: usize,
    ) -> Result<Self> {
        let n = items.len();
        if bottom >= n {
            return Err(Error::internal("poset bottom index out of range"));
        }
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::internal("poset cover index out of range"));
            }
            if items[a].0 <= items[b].0 {
                return Err(Error::internal(
                    "poset covers must strictly decrease dimension upward",
                ));
            }
        }
        let words = n.div_ceil(64);
        let mut below = vec![vec![0u64; words]; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| items[b].0.cmp(&items[a].0).then(a.cmp(&b)));
        let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &covers {
            incoming[b].push(a);
        }
        let mut nodes: Vec<PosetNode> = items
            .into_iter()
            .map(|(dim, label, witness)| PosetNode { dim, label, witness, mobius: Int::zero() })
            .collect();
        nodes[bottom].mobius = int(1);
        for &x in &order {
            for &a in &incoming[x] {
                let (src, dst) = if a < x {
                    let (lo, hi) = below.split_at_mut(x);
                    (&lo[a], &mut hi[0])
                } else {
                    let (lo, hi) = below.split_at_mut(a);
                    (&hi[0], &mut lo[x])
                };
                bit_or(dst, src);
            }
            for &a in &incoming[x] {
                bit_set(&mut below[x], a);
            }
            if x != bottom {
                if !bit_get(&below[x], bottom) {
                    return Err(Error::internal("poset element not above the bottom"));
                }
                let mut acc = Int::zero();
                for y in 0..n {
                    if bit_get(&below[x], y) {
                        acc += &nodes[y].mobius;
                    }
                }
                nodes[x].mobius = -acc;
            }
        }
        Ok(RankedPoset { nodes, covers, bottom, below })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &PosetNode {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[PosetNode] {
        &self.nodes
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// Strict order: is `a` strictly below `b`?
    pub fn less(&self, a: usize, b: usize) -> bool {
        bit_get(&self.below[b], a)
    }

    pub fn strictly_below(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.less(y, x)).collect()
    }

    /// Characteristic polynomial: sum of mu(x) * var^dim(x) over all
    /// elements.
    pub fn char_poly(&self, var: &str) -> IntPolynomial {
        let top = self.nodes.iter().map(|n| n.dim).max().unwrap_or(0);
        let mut coeffs = vec![Int::zero(); top + 1];
        for n in &self.nodes {
            coeffs[n.dim] += &n.mobius;
        }
        IntPolynomial::new(var, coeffs)
    }

    /// Number of elements per dimension, indexed by dimension.
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let top = self.nodes.iter().map(|n| n.dim).max().unwrap_or(0);
        let mut out = vec![0usize; top + 1];
        for n in &self.nodes {
            out[n.dim] += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn items(dims: &[usize]) -> Vec<(usize, String, Option<Rref>)> {
        dims.iter().enumerate().map(|(i, &d)| (d, i.to_string(), None)).collect()
    }

    #[test]
    fn boolean_lattice_of_two_lines() {
        // C^2, two lines through the origin, and the origin
        let p = RankedPoset::from_covers(
            items(&[2, 1, 1, 0]),
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            0,
        )
        .unwrap();
        assert_eq!(p.node(0).mobius, int(1));
        assert_eq!(p.node(1).mobius, int(-1));
        assert_eq!(p.node(2).mobius, int(-1));
        assert_eq!(p.node(3).mobius, int(1));
        assert_eq!(p.char_poly("q"), IntPolynomial::from_i64("q", &[1, -2, 1]));
        assert!(p.less(0, 3));
        assert!(!p.less(1, 2));
        assert_eq!(p.counts_by_dim(), vec![1, 2, 1]);
    }

    #[test]
    fn braid_poset() {
        // three lines through the origin in C^2
        let p = RankedPoset::from_covers(
            items(&[2, 1, 1, 1, 0]),
            vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
            0,
        )
        .unwrap();
        assert_eq!(p.node(4).mobius, int(2));
        assert_eq!(p.char_poly("q"), IntPolynomial::from_i64("q", &[2, -3, 1]));
    }

    #[test]
    fn mobius_recursion_sums_to_zero() {
        let p = RankedPoset::from_covers(
            items(&[3, 2, 2, 1, 1, 0]),
            vec![(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (3, 5), (4, 5)],
            0,
        )
        .unwrap();
        for x in 0..p.len() {
            if x == p.bottom() {
                continue;
            }
            let mut total = p.node(x).mobius.clone();
            for y in p.strictly_below(x) {
                total += &p.node(y).mobius;
            }
            assert!(total.is_zero(), "interval sum at {x}");
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(RankedPoset::from_covers(items(&[2, 2]), vec![(0, 1)], 0).is_err());
        assert!(RankedPoset::from_covers(items(&[2, 1, 1]), vec![(0, 1)], 0).is_err());
        assert!(RankedPoset::from_covers(items(&[1]), vec![], 3).is_err());
    }
}
