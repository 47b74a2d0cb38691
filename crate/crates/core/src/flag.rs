//! Flag complexes of graphs, simplicial homology over the integers, and
//! homological/homotopical finiteness reports for Bestvina–Brady groups.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exact::{int, modular_rank, rational_rank, smith_normal_form, Int, IntMatrix};
use crate::graphs::{cliques_by_size, multipartite_shape_of, Graph, MultipartiteShape};
use crate::{Error, Result};

/// Flag complex of a graph: the simplices in dimension d are the (d+1)-vertex
/// cliques, stored as sorted vertex lists in lexicographic order.
#[derive(Debug, Clone)]
pub struct FlagComplex {
    simplices: Vec<Vec<Vec<u32>>>,
}

impl FlagComplex {
    pub fn from_graph(g: &Graph) -> Self {
        let max = g.vertices().max(1);
        let mut by_size = cliques_by_size(g, 1, max);
        while by_size.len() > 1 && by_size.last().is_some_and(Vec::is_empty) {
            by_size.pop();
        }
        FlagComplex { simplices: by_size }
    }

    /// Dimension of the complex, or None when it has no vertices.
    pub fn dim(&self) -> Option<usize> {
        if self.simplices.first().is_none_or(Vec::is_empty) {
            None
        } else {
            Some(self.simplices.iter().take_while(|s| !s.is_empty()).count() - 1)
        }
    }

    pub fn simplices(&self, d: usize) -> &[Vec<u32>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    /// Numbers of simplices per dimension, up to the dimension of the complex.
    pub fn counts(&self) -> Vec<usize> {
        match self.dim() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.count(k)).collect(),
        }
    }

    /// Ordinary (non-reduced) Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Boundary matrix of the k-th differential C_k -> C_{k-1}, k >= 1;
    /// rows are (k-1)-simplices, columns k-simplices.
    pub fn boundary_matrix(&self, k: usize) -> IntMatrix {
        assert!(k >= 1, "boundary matrix starts at k = 1");
        let faces = self.simplices(k - 1);
        let cells = self.simplices(k);
        let index: BTreeMap<&[u32], usize> =
            faces.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut m = IntMatrix::zero(faces.len(), cells.len());
        for (col, cell) in cells.iter().enumerate() {
            for drop in 0..cell.len() {
                let mut face = cell.clone();
                face.remove(drop);
                let row = index[face.as_slice()];
                let sign = if drop % 2 == 0 { int(1) } else { int(-1) };
                m.set(row, col, sign);
            }
        }
        m
    }
}

/// Coefficient field for Betti number computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// Unreduced Betti numbers b_0..b_top of a chain complex over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    pub field: Field,
    pub betti: Vec<usize>,
}

/// Unreduced Betti numbers of the simplicial chain complex of `c` over the
/// rationals or a prime field, by exact rank computation.
pub fn simplicial_betti(c: &FlagComplex, field: Field) -> Result<BettiVector> {
    if let Field::Prime(p) = field {
        if !crate::exact::is_prime_u64(p) {
            return Err(Error::domain("field characteristic must be 0 or prime"));
        }
    }
    let counts = c.counts();
    let top = counts.len();
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        let d = c.boundary_matrix(k);
        ranks[k] = match field {
            Field::Rationals => rational_rank(&d),
            Field::Prime(p) => modular_rank(&d, p)?,
        };
    }
    let mut betti = Vec::with_capacity(top);
    for k in 0..top {
        let b = counts[k]
            .checked_sub(ranks[k])
            .and_then(|m| m.checked_sub(ranks[k + 1]))
            .ok_or_else(|| Error::internal("boundary ranks violate the chain complex identity"))?;
        betti.push(b);
    }
    debug_assert_eq!(
        betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum::<i64>(),
        c.euler_characteristic()
    );
    Ok(BettiVector { field, betti })
}

/// One reduced homology group: free rank plus the invariant factors > 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<Int>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Reduced simplicial homology with integer coefficients in dimensions
/// 0..=max_dim; the complex must have at least one vertex.
pub fn reduced_homology(l: &FlagComplex, max_dim: usize) -> Result<Vec<HomologyGroup>> {
    let n0 = l.count(0);
    if n0 == 0 {
        return Err(Error::domain("homology of the empty complex"));
    }
    let mut ranks = vec![0usize; max_dim + 2];
    let mut torsions: Vec<Vec<Int>> = vec![Vec::new(); max_dim + 2];
    for k in 1..=max_dim + 1 {
        if l.count(k) == 0 {
            break;
        }
        let d = l.boundary_matrix(k);
        let snf = smith_normal_form(&d)?;
        ranks[k] = snf.rank;
        torsions[k] = snf.torsion();
        debug_assert_eq!(rational_rank(&d), snf.rank);
    }
    let mut out = Vec::with_capacity(max_dim + 1);
    for k in 0..=max_dim {
        let cycles = if k == 0 { n0 - 1 } else { l.count(k) - ranks[k] };
        let betti = cycles.checked_sub(ranks[k + 1]).ok_or_else(|| {
            Error::internal("boundary ranks violate the chain complex identity")
        })?;
        out.push(HomologyGroup { betti, torsion: torsions[k + 1].clone() });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    NotDetermined,
}

/// Reason a flag complex was certified simply connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScCertificate {
    /// Triangle-free complex equal to a tree.
    TriangleFreeTree,
    /// Cone on a subcomplex: some vertex is adjacent to all others.
    ConeVertex,
    /// Join of at least three non-empty complexes.
    JoinOfThreeFactors,
    /// Join of two complexes, one of them path-connected.
    JoinWithConnectedFactor,
}

impl ScCertificate {
    pub fn describe(self) -> &'static str {
        match self {
            ScCertificate::TriangleFreeTree => "the complex is a tree",
            ScCertificate::ConeVertex => "the complex is a cone over a vertex",
            ScCertificate::JoinOfThreeFactors => "the complex is a join of three or more non-empty complexes",
            ScCertificate::JoinWithConnectedFactor => {
                "the complex is a join of two complexes, one of them path-connected"
            }
        }
    }
}

/// Finiteness properties of the Bestvina-Brady group of a graph: `fp[k-1]`
/// decides FP_k and `f[k-1]` reports F_k, for k = 1..=r_max. FP_k holds
/// exactly when the reduced integral homology of the flag complex vanishes in
/// dimensions <= k-1 (equivalently, reduced homology vanishes there over
/// every coefficient field), and that test is exact; F_k additionally needs
/// the flag complex simply connected, which is certified where possible and
/// otherwise left undetermined.
#[derive(Debug, Clone)]
pub struct FinitenessReport {
    pub homology: Vec<HomologyGroup>,
    pub fp: Vec<Status>,
    pub f: Vec<Status>,
    pub fp_reasons: Vec<String>,
    pub f_reasons: Vec<String>,
    pub simply_connected: Status,
    pub certificate: Option<ScCertificate>,
}

fn simple_connectivity(g: &Graph) -> (Status, Option<ScCertificate>) {
    if !g.is_connected() {
        return (Status::Fails, None);
    }
    let triangle_free = cliques_by_size(g, 3, 3)[0].is_empty();
    if triangle_free {
        return if g.is_tree() {
            (Status::Holds, Some(ScCertificate::TriangleFreeTree))
        } else {
            (Status::Fails, None)
        };
    }
    if (0..g.vertices() as u32)
        .any(|v| (0..g.vertices() as u32).all(|w| w == v || g.adjacent(v, w)))
    {
        return (Status::Holds, Some(ScCertificate::ConeVertex));
    }
    let factors = g.complement().connected_components();
    if factors.len() >= 3 {
        return (Status::Holds, Some(ScCertificate::JoinOfThreeFactors));
    }
    if factors.len() == 2
        && factors.iter().any(|f| g.induced(f).is_connected())
    {
        return (Status::Holds, Some(ScCertificate::JoinWithConnectedFactor));
    }
    (Status::NotDetermined, None)
}

fn homology_reason(h: &[HomologyGroup], k: usize) -> String {
    match h[..k].iter().position(|g| !g.is_trivial()) {
        None => format!(
            "reduced integral homology of the flag complex vanishes in degrees <= {}, hence over every field",
            k - 1
        ),
        Some(j) => {
            let g = &h[j];
            if g.torsion.is_empty() {
                format!("reduced homology in degree {j} has rank {}", g.betti)
            } else {
                format!(
                    "reduced homology in degree {j} has rank {} and torsion {:?}",
                    g.betti, g.torsion
                )
            }
        }
    }
}

/// `shape_hint`, when given, asserts that `g` is the complete multipartite
/// graph of that shape; a mismatch is rejected before anything is computed.
pub fn finiteness_report(
    g: &Graph,
    shape_hint: Option<&MultipartiteShape>,
    r_max: usize,
) -> Result<FinitenessReport> {
    if r_max == 0 {
        return Err(Error::domain("finiteness report needs r_max >= 1"));
    }
    if g.vertices() == 0 {
        return Err(Error::domain("finiteness report needs a non-empty graph"));
    }
    if let Some(hint) = shape_hint {
        let found = multipartite_shape_of(g);
        if found.as_ref().map(MultipartiteShape::sorted) != Some(hint.sorted()) {
            return Err(Error::domain("shape hint does not match the graph"));
        }
    }
    let l = FlagComplex::from_graph(g);
    let homology = reduced_homology(&l, r_max - 1)?;
    let mut fp = Vec::with_capacity(r_max);
    let mut fp_reasons = Vec::with_capacity(r_max);
    for k in 1..=r_max {
        let ok = homology[..k].iter().all(HomologyGroup::is_trivial);
        fp.push(if ok { Status::Holds } else { Status::Fails });
        fp_reasons.push(homology_reason(&homology, k));
    }
    let (simply_connected, certificate) = simple_connectivity(g);
    let mut f = Vec::with_capacity(r_max);
    let mut f_reasons = Vec::with_capacity(r_max);
    for k in 1..=r_max {
        if k == 1 {
            f.push(fp[0]);
            f_reasons.push(String::from("F_1 is equivalent to FP_1"));
            continue;
        }
        let (status, reason) = match (fp[k - 1], simply_connected) {
            (Status::Fails, _) => (Status::Fails, format!("FP_{k} fails")),
            (_, Status::Holds) => {
                let cert = certificate.map(ScCertificate::describe).unwrap_or("by inspection");
                (Status::Holds, format!("FP_{k} holds and the flag complex is simply connected: {cert}"))
            }
            (_, Status::Fails) => {
                (Status::Fails, String::from("the flag complex is not simply connected"))
            }
            _ => (
                Status::NotDetermined,
                String::from("no simple-connectivity certificate applies"),
            ),
        };
        f.push(status);
        f_reasons.push(reason);
    }
    Ok(FinitenessReport { homology, fp, f, fp_reasons, f_reasons, simply_connected, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{multipartite_graph, wheel_graph, MultipartiteShape};
    use alloc::vec;

    fn betti(groups: &[HomologyGroup]) -> Vec<usize> {
        groups.iter().map(|h| h.betti).collect()
    }

    fn shape(parts: &[u32]) -> Graph {
        multipartite_graph(&MultipartiteShape::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn complex_of_octahedron_is_a_two_sphere() {
        let l = FlagComplex::from_graph(&shape(&[2, 2, 2]));
        assert_eq!(l.counts(), vec![6, 12, 8]);
        assert_eq!(l.euler_characteristic(), 2);
        let h = reduced_homology(&l, 2).unwrap();
        assert_eq!(betti(&h), vec![0, 0, 1]);
        assert!(h.iter().all(|g| g.torsion.is_empty()));
    }

    #[test]
    fn spheres_from_multipartite_joins() {
        // K_{2,2} -> S^1, K_{2,2,2,2} -> S^3
        let h = reduced_homology(&FlagComplex::from_graph(&shape(&[2, 2])), 1).unwrap();
        assert_eq!(betti(&h), vec![0, 1]);
        let h = reduced_homology(&FlagComplex::from_graph(&shape(&[2, 2, 2, 2])), 3).unwrap();
        assert_eq!(betti(&h), vec![0, 0, 0, 1]);
    }

    #[test]
    fn contractible_cases() {
        for g in [Graph::path(5), Graph::complete(4), wheel_graph(5).unwrap()] {
            let l = FlagComplex::from_graph(&g);
            let h = reduced_homology(&l, 3).unwrap();
            assert!(h.iter().all(HomologyGroup::is_trivial), "{g:?}");
            assert_eq!(l.euler_characteristic(), 1);
        }
    }

    #[test]
    fn cycle_has_first_homology() {
        let h = reduced_homology(&FlagComplex::from_graph(&Graph::cycle(6)), 2).unwrap();
        assert_eq!(betti(&h), vec![0, 1, 0]);
        let h = reduced_homology(&FlagComplex::from_graph(&Graph::edgeless(3)), 1).unwrap();
        assert_eq!(betti(&h), vec![2, 0]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let l = FlagComplex::from_graph(&shape(&[2, 2, 2]));
        let d1 = l.boundary_matrix(1);
        let d2 = l.boundary_matrix(2);
        let prod = d1.mul(&d2);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                assert!(prod.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn octahedron_report() {
        let rep = finiteness_report(&shape(&[2, 2, 2]), None, 3).unwrap();
        assert_eq!(rep.fp, vec![Status::Holds, Status::Holds, Status::Fails]);
        assert_eq!(rep.f, vec![Status::Holds, Status::Holds, Status::Fails]);
        assert_eq!(rep.simply_connected, Status::Holds);
        assert_eq!(rep.certificate, Some(ScCertificate::JoinOfThreeFactors));
    }

    #[test]
    fn tree_and_cycle_reports() {
        let rep = finiteness_report(&Graph::path(4), None, 3).unwrap();
        assert!(rep.fp.iter().all(|&s| s == Status::Holds));
        assert!(rep.f.iter().all(|&s| s == Status::Holds));
        assert_eq!(rep.certificate, Some(ScCertificate::TriangleFreeTree));

        let rep = finiteness_report(&Graph::cycle(5), None, 2).unwrap();
        assert_eq!(rep.fp, vec![Status::Holds, Status::Fails]);
        assert_eq!(rep.f, vec![Status::Holds, Status::Fails]);
        assert_eq!(rep.simply_connected, Status::Fails);

        let rep = finiteness_report(&Graph::edgeless(2), None, 2).unwrap();
        assert_eq!(rep.fp, vec![Status::Fails, Status::Fails]);
        assert_eq!(rep.f, vec![Status::Fails, Status::Fails]);
    }

    #[test]
    fn cone_certificate() {
        let rep = finiteness_report(&wheel_graph(5).unwrap(), None, 2).unwrap();
        assert_eq!(rep.certificate, Some(ScCertificate::ConeVertex));
        assert!(rep.f.iter().all(|&s| s == Status::Holds));
    }

    #[test]
    fn join_of_two_with_connected_factor() {
        // K_{2,1,1} has dominating vertices, so the cone certificate wins
        let rep = finiteness_report(&shape(&[2, 1, 1]), None, 2).unwrap();
        assert_eq!(rep.certificate, Some(ScCertificate::ConeVertex));
        // P_4 joined with two isolated vertices: neither factor splits
        // further, no vertex dominates, and the path factor is connected
        let mut edges = vec![(0u32, 1u32), (1, 2), (2, 3)];
        for a in 0..4u32 {
            for b in 4..6u32 {
                edges.push((a, b));
            }
        }
        let g = Graph::new(6, edges).unwrap();
        let rep = finiteness_report(&g, None, 2).unwrap();
        assert_eq!(rep.certificate, Some(ScCertificate::JoinWithConnectedFactor));
        assert_eq!(rep.f, vec![Status::Holds, Status::Holds]);
    }

    #[test]
    fn unreduced_betti_vectors() {
        let cases: [(&[u32], &[usize]); 3] =
            [(&[2, 2, 2], &[1, 0, 1]), (&[2, 3], &[1, 2]), (&[1, 1, 1, 1], &[1, 0, 0, 0])];
        for (parts, expected) in cases {
            let c = FlagComplex::from_graph(&shape(parts));
            for field in [Field::Rationals, Field::Prime(2), Field::Prime(3)] {
                let bv = simplicial_betti(&c, field).unwrap();
                assert_eq!(bv.betti, expected.to_vec(), "{parts:?} over {field:?}");
            }
        }
        assert!(simplicial_betti(&FlagComplex::from_graph(&shape(&[2, 2])), Field::Prime(4))
            .unwrap_err()
            .is_domain());
    }

    #[test]
    fn shape_hint_is_checked() {
        let hint = MultipartiteShape::new(vec![2, 2, 2]).unwrap();
        assert!(finiteness_report(&shape(&[2, 2, 2]), Some(&hint), 2).is_ok());
        assert!(finiteness_report(&Graph::cycle(5), Some(&hint), 2).unwrap_err().is_domain());
        let rep = finiteness_report(&shape(&[2, 2]), None, 2).unwrap();
        assert!(rep.fp_reasons[1].contains("degree 1"));
        assert!(rep.f_reasons[0].contains("F_1"));
    }
}
