//! Hyperplane arrangements over the rationals: intersection posets built
//! level by level, characteristic and Poincaré polynomials, graphic and
//! Bestvina–Brady arrangements, and generic plane section combinatorics.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::exact::{
    int, is_prime_u64, poly_eval_substitute, rat, Int, IntPolynomial, PoincareKind, Rat, Rref,
    RrefGrow,
};
use crate::graphs::{Graph, MultipartiteShape};
use crate::poset::RankedPoset;
use crate::{Error, Result};

/// One affine-linear equation sum(coeffs_i * z_i) + constant = 0. At least
/// one coefficient must be non-zero, so the zero set is a hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<Rat>,
    constant: Rat,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rat>, constant: Rat) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::domain("a linear form needs a non-zero coefficient"));
        }
        Ok(LinearForm { coeffs, constant })
    }

    pub fn from_i64(coeffs: &[i64], constant: i64) -> Result<Self> {
        LinearForm::new(coeffs.iter().map(|&c| rat(c, 1)).collect(), rat(constant, 1))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    /// Extended coefficient vector scaled so its first non-zero entry is 1;
    /// two forms cut the same hyperplane exactly when these keys agree.
    fn canonical_key(&self) -> Vec<Rat> {
        let mut v: Vec<Rat> = self.coeffs.clone();
        v.push(self.constant.clone());
        let lead = v.iter().find(|c| !c.is_zero()).cloned().expect("non-zero form");
        for c in v.iter_mut() {
            *c /= &lead;
        }
        v
    }
}

/// A finite set of pairwise distinct hyperplanes in C^ambient_dim. Projective
/// arrangements are stored as their central cones: every constant is zero and
/// the complement lives in the projective space of dimension ambient_dim - 1.
#[derive(Debug, Clone)]
pub struct HyperplaneArrangement {
    ambient_dim: usize,
    projective: bool,
    forms: Vec<LinearForm>,
}

impl HyperplaneArrangement {
    pub fn new(ambient_dim: usize, projective: bool, forms: Vec<LinearForm>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::domain("arrangements need ambient dimension >= 1"));
        }
        let mut keys = BTreeSet::new();
        for f in &forms {
            if f.coeffs.len() != ambient_dim {
                return Err(Error::domain("form length does not match the ambient dimension"));
            }
            if projective && !f.constant.is_zero() {
                return Err(Error::domain("projective arrangements need homogeneous forms"));
            }
            if !keys.insert(f.canonical_key()) {
                return Err(Error::domain("two forms cut the same hyperplane"));
            }
        }
        Ok(HyperplaneArrangement { ambient_dim, projective, forms })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn projective(&self) -> bool {
        self.projective
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    /// Rank of the coefficient system, ignoring constants.
    pub fn rank(&self) -> usize {
        let mut rref = Rref::new(self.ambient_dim);
        let zero = Rat::zero();
        for f in &self.forms {
            rref.push(&f.coeffs, &zero);
        }
        rref.rank()
    }
}

/// All non-empty intersections of subsets of hyperplanes, ordered by reverse
/// inclusion, with Möbius values. Built level by level: each flat of
/// codimension k is cut by each hyperplane not containing it, and the
/// resulting codimension-(k+1) flats are deduplicated by their canonical
/// row-echelon witness. Every containment between consecutive levels arises
/// this way, so the recorded parent links are exactly the cover relations.
pub fn intersection_poset(a: &HyperplaneArrangement) -> Result<RankedPoset> {
    let dim = a.ambient_dim;
    let mut flats: Vec<Rref> = vec![Rref::new(dim)];
    let mut covers: Vec<(usize, usize)> = Vec::new();
    let mut current: BTreeMap<Rref, usize> = BTreeMap::new();
    current.insert(flats[0].clone(), 0);
    while !current.is_empty() {
        let mut children: BTreeMap<Rref, BTreeSet<usize>> = BTreeMap::new();
        for (flat, &idx) in &current {
            for form in &a.forms {
                let mut grown = flat.clone();
                match grown.push(&form.coeffs, &(-&form.constant)) {
                    RrefGrow::Redundant | RrefGrow::Inconsistent => {}
                    RrefGrow::Extended => {
                        children.entry(grown).or_default().insert(idx);
                    }
                }
            }
        }
        let mut next: BTreeMap<Rref, usize> = BTreeMap::new();
        for (flat, parents) in children {
            flats.push(flat.clone());
            let child = flats.len() - 1;
            covers.extend(parents.into_iter().map(|p| (p, child)));
            next.insert(flat, child);
        }
        current = next;
    }
    let items = flats
        .iter()
        .map(|f| {
            let contained: Vec<String> = a
                .forms
                .iter()
                .enumerate()
                .filter(|(_, h)| f.implies(&h.coeffs, &(-&h.constant)))
                .map(|(i, _)| i.to_string())
                .collect();
            let label =
                if contained.is_empty() { String::from("ambient") } else { format!("{{{}}}", contained.join(",")) };
            (f.solution_dim(), label, Some(f.clone()))
        })
        .collect();
    RankedPoset::from_covers(items, covers, 0)
}

/// Characteristic polynomial of an intersection poset, in the variable q.
pub fn char_poly(p: &RankedPoset) -> IntPolynomial {
    p.char_poly("q")
}

/// Poincaré polynomial of the complement. For a projective arrangement the
/// polynomial of the central cone is divided exactly by (1+t).
pub fn poincare(a: &HyperplaneArrangement) -> Result<IntPolynomial> {
    if a.projective && a.forms.is_empty() {
        return Err(Error::domain("empty projective arrangements have no complement of this kind"));
    }
    let chi = char_poly(&intersection_poset(a)?);
    let cone = poly_eval_substitute(&chi, PoincareKind::Hyperplane { ambient_dim: a.ambient_dim })?;
    if a.projective {
        cone.divide_exact(&IntPolynomial::from_i64("t", &[1, 1]))
    } else {
        Ok(cone)
    }
}

/// Central arrangement in C^|V| with one hyperplane w_i = w_j per edge.
pub fn graphic_arrangement(g: &Graph) -> Result<HyperplaneArrangement> {
    if g.vertices() == 0 {
        return Err(Error::domain("graphic arrangements need at least one vertex"));
    }
    let n = g.vertices();
    let forms = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut coeffs = vec![Rat::zero(); n];
            coeffs[u as usize] = Rat::one();
            coeffs[v as usize] = -Rat::one();
            LinearForm::new(coeffs, Rat::zero())
        })
        .collect::<Result<Vec<_>>>()?;
    HyperplaneArrangement::new(n, false, forms)
}

fn contract_edge(g: &Graph, u: u32, v: u32) -> Graph {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    let relabel = |w: u32| if w == v { u } else if w > v { w - 1 } else { w };
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .filter(|&&e| e != (u, v) && e != (v, u))
        .map(|&(a, b)| {
            let (a, b) = (relabel(a), relabel(b));
            if a < b { (a, b) } else { (b, a) }
        })
        .filter(|&(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::new(g.vertices() - 1, edges).expect("contraction stays a simple graph")
}

/// Chromatic polynomial by deletion–contraction; independent oracle for
/// graphic arrangement characteristic polynomials.
pub fn chromatic_poly(g: &Graph) -> IntPolynomial {
    match g.edges().first() {
        None => IntPolynomial::monomial("q", int(1), g.vertices()),
        Some(&(u, v)) => {
            let deleted = Graph::new(
                g.vertices(),
                g.edges().iter().copied().filter(|&e| e != (u, v)).collect(),
            )
            .expect("deletion stays a simple graph");
            chromatic_poly(&deleted).sub(&chromatic_poly(&contract_edge(g, u, v)))
        }
    }
}

fn primes(count: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate: u64 = 2;
    while out.len() < count {
        if is_prime_u64(candidate) {
            out.push(candidate as i64);
        }
        candidate += 1;
    }
    out
}

/// The alpha values of the genericity scheme: alpha[i][j-1] for
/// 1 <= j <= n_i - 1 is a distinct prime, assigned in order of (i, j), and
/// the generic a is the next prime after all of them.
pub fn generic_parameters(shape: &MultipartiteShape) -> (Vec<Vec<i64>>, i64) {
    let total: usize = shape.parts().iter().map(|&n| n as usize - 1).sum();
    let ps = primes(total + 1);
    let mut alphas = Vec::with_capacity(shape.parts().len());
    let mut used = 0;
    for &n in shape.parts() {
        let take = n as usize - 1;
        alphas.push(ps[used..used + take].to_vec());
        used += take;
    }
    (alphas, ps[total])
}

/// Projective arrangement of Sum(n_i) hyperplanes in P^r realizing the
/// Bestvina–Brady group of the complete multipartite graph of `shape`: the
/// r+1 coordinate hyperplanes plus the cyclic chain of difference forms.
/// `special` selects indices j_i (1-based, j_i < n_i) putting a on the
/// corresponding bifurcation value; otherwise a avoids all of them.
pub fn bb_arrangement(
    shape: &MultipartiteShape,
    special: Option<&[u32]>,
) -> Result<HyperplaneArrangement> {
    let r = shape.r();
    if r < 1 {
        return Err(Error::domain("the arrangement needs at least two parts"));
    }
    let parts = shape.parts();
    let (alphas, generic_a) = generic_parameters(shape);
    let a: i64 = match special {
        None => generic_a,
        Some(indices) => {
            if indices.len() != r + 1 {
                return Err(Error::domain("special index tuple length must match the shape"));
            }
            let mut product: i64 = 1;
            for (i, &j) in indices.iter().enumerate() {
                if j == 0 || j >= parts[i] {
                    return Err(Error::domain("special index out of range"));
                }
                product *= alphas[i][j as usize - 1];
            }
            product
        }
    };
    let dim = r + 1;
    let mut forms = Vec::new();
    for i in 0..dim {
        let mut coeffs = vec![Rat::zero(); dim];
        coeffs[i] = Rat::one();
        forms.push(LinearForm::new(coeffs, Rat::zero())?);
    }
    for &alpha in &alphas[0] {
        let mut coeffs = vec![Rat::zero(); dim];
        coeffs[0] = rat(a, 1);
        coeffs[1] = rat(-alpha, 1);
        forms.push(LinearForm::new(coeffs, Rat::zero())?);
    }
    for i in 1..r {
        for &alpha in &alphas[i] {
            let mut coeffs = vec![Rat::zero(); dim];
            coeffs[i] = Rat::one();
            coeffs[i + 1] = rat(-alpha, 1);
            forms.push(LinearForm::new(coeffs, Rat::zero())?);
        }
    }
    for &alpha in &alphas[r] {
        let mut coeffs = vec![Rat::zero(); dim];
        coeffs[r] = Rat::one();
        coeffs[0] = rat(-alpha, 1);
        forms.push(LinearForm::new(coeffs, Rat::zero())?);
    }
    HyperplaneArrangement::new(dim, true, forms)
}

/// Incidence data of a generic plane section of a projective arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionCombinatorics {
    pub line_count: usize,
    /// Multiplicities >= 3, sorted descending.
    pub multiple_points: Vec<usize>,
    pub double_point_count: usize,
}

/// Combinatorics of the line arrangement cut by a generic 2-plane: one line
/// per hyperplane, one point of multiplicity m per rank-2 flat lying on m
/// hyperplanes. No section is constructed; by genericity the rank-2
/// truncation of the poset is the section's poset.
pub fn generic_section_combinatorics(a: &HyperplaneArrangement) -> Result<SectionCombinatorics> {
    if !a.projective {
        return Err(Error::domain("plane sections are taken of projective arrangements"));
    }
    if a.rank() < 3 {
        return Err(Error::domain("plane sections need an arrangement of rank at least 3"));
    }
    let poset = intersection_poset(a)?;
    let mut multiple_points = Vec::new();
    let mut double_point_count = 0usize;
    let mut pairs_seen = 0usize;
    for node in poset.nodes() {
        if node.dim != a.ambient_dim - 2 {
            continue;
        }
        let witness = node.witness.as_ref().expect("arrangement nodes carry witnesses");
        let mult = a
            .forms
            .iter()
            .filter(|h| witness.implies(&h.coeffs, &(-&h.constant)))
            .count();
        pairs_seen += mult * (mult - 1) / 2;
        if mult >= 3 {
            multiple_points.push(mult);
        } else {
            double_point_count += 1;
        }
    }
    let n = a.forms.len();
    if pairs_seen != n * (n - 1) / 2 {
        return Err(Error::internal("rank-2 flats fail to account for every hyperplane pair"));
    }
    multiple_points.sort_unstable_by(|x, y| y.cmp(x));
    Ok(SectionCombinatorics { line_count: n, multiple_points, double_point_count })
}

/// Number of points of F_p^d lying on none of the hyperplanes; for good
/// primes this equals the characteristic polynomial at p. Denominators and
/// leading data must stay non-degenerate mod p, otherwise the reduction is
/// rejected.
pub fn count_points_mod_p(a: &HyperplaneArrangement, p: u64) -> Result<u64> {
    if !is_prime_u64(p) {
        return Err(Error::domain("point counts need a prime modulus"));
    }
    let pi = p as i128;
    let mut reduced: Vec<(Vec<i128>, i128)> = Vec::with_capacity(a.forms.len());
    for f in &a.forms {
        let mut scale = Int::one();
        for c in f.coeffs.iter().chain(core::iter::once(&f.constant)) {
            scale = scale.lcm(c.denom());
        }
        if (&scale % int(p as i64)).is_zero() {
            return Err(Error::domain("denominator vanishes mod p"));
        }
        let lift = |x: &Rat| -> Result<i128> {
            let v = (x * Rat::from_integer(scale.clone())).to_integer();
            let m = (&v % int(p as i64)).to_i128().expect("residue fits");
            Ok(m.rem_euclid(pi))
        };
        let coeffs = f.coeffs.iter().map(lift).collect::<Result<Vec<_>>>()?;
        let constant = lift(&f.constant)?;
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::domain("form degenerates mod p"));
        }
        reduced.push((coeffs, constant));
    }
    let d = a.ambient_dim;
    let total = (p as u128).checked_pow(d as u32).ok_or_else(|| Error::domain("modulus too large"))?;
    if total > 1 << 26 {
        return Err(Error::domain("point count too large to enumerate"));
    }
    let mut count = 0u64;
    let mut point = vec![0i128; d];
    'outer: loop {
        let avoided = reduced.iter().all(|(coeffs, constant)| {
            let mut s = *constant;
            for (c, x) in coeffs.iter().zip(&point) {
                s = (s + c * x) % pi;
            }
            s % pi != 0
        });
        if avoided {
            count += 1;
        }
        for slot in point.iter_mut() {
            *slot += 1;
            if *slot < pi {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid_k3() -> HyperplaneArrangement {
        graphic_arrangement(&Graph::complete(3)).unwrap()
    }

    /// Element counts by codimension (trailing empty levels trimmed) and the
    /// sorted Möbius values.
    fn poset_profile(p: &RankedPoset) -> (Vec<usize>, Vec<i64>) {
        let mut counts = p.counts_by_dim();
        counts.reverse();
        while counts.last() == Some(&0) {
            counts.pop();
        }
        let mut mobius: Vec<i64> = p.nodes().iter().map(|n| n.mobius.to_i64().unwrap()).collect();
        mobius.sort_unstable();
        (counts, mobius)
    }

    #[test]
    fn braid_poset_and_polynomials() {
        let a = braid_k3();
        let p = intersection_poset(&a).unwrap();
        let (counts, _) = poset_profile(&p);
        assert_eq!(counts, vec![1, 3, 1]);
        assert_eq!(p.node(p.len() - 1).mobius, int(2));
        assert_eq!(char_poly(&p), IntPolynomial::from_i64("q", &[0, 2, -3, 1]));
        assert_eq!(char_poly(&p), chromatic_poly(&Graph::complete(3)));
        assert_eq!(poincare(&a).unwrap(), IntPolynomial::from_i64("t", &[1, 3, 2]));
    }

    #[test]
    fn empty_and_generic_posets() {
        let empty = HyperplaneArrangement::new(4, false, Vec::new()).unwrap();
        let p = intersection_poset(&empty).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(char_poly(&p), IntPolynomial::monomial("q", int(1), 4));

        let two_lines = HyperplaneArrangement::new(
            2,
            false,
            vec![LinearForm::from_i64(&[1, 0], 0).unwrap(), LinearForm::from_i64(&[0, 1], 0).unwrap()],
        )
        .unwrap();
        let p = intersection_poset(&two_lines).unwrap();
        let (counts, mobius) = poset_profile(&p);
        assert_eq!(counts, vec![1, 2, 1]);
        assert_eq!(mobius, vec![-1, -1, 1, 1]);
    }

    #[test]
    fn affine_flats_and_inconsistencies() {
        // z_0 = 0, z_0 = 1, z_1 = 0: two intersection points, parallels skipped
        let a = HyperplaneArrangement::new(
            2,
            false,
            vec![
                LinearForm::from_i64(&[1, 0], 0).unwrap(),
                LinearForm::from_i64(&[1, 0], -1).unwrap(),
                LinearForm::from_i64(&[0, 1], 0).unwrap(),
            ],
        )
        .unwrap();
        let p = intersection_poset(&a).unwrap();
        let (counts, _) = poset_profile(&p);
        assert_eq!(counts, vec![1, 3, 2]);
        assert_eq!(char_poly(&p), IntPolynomial::from_i64("q", &[2, -3, 1]));
        assert_eq!(poincare(&a).unwrap(), IntPolynomial::from_i64("t", &[1, 3, 2]));
    }

    #[test]
    fn rejects_bad_arrangements() {
        assert!(HyperplaneArrangement::new(
            2,
            false,
            vec![LinearForm::from_i64(&[1, 1], 0).unwrap(), LinearForm::from_i64(&[2, 2], 0).unwrap()],
        )
        .unwrap_err()
        .is_domain());
        assert!(HyperplaneArrangement::new(
            2,
            true,
            vec![LinearForm::from_i64(&[1, 1], 5).unwrap()],
        )
        .unwrap_err()
        .is_domain());
        assert!(LinearForm::from_i64(&[0, 0], 3).is_err());
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_poly(&Graph::complete(3)), IntPolynomial::from_i64("q", &[0, 2, -3, 1]));
        assert_eq!(chromatic_poly(&Graph::path(4)), IntPolynomial::from_i64("q", &[0, -1, 3, -3, 1]));
        // (q-1)^4 + (q-1)
        assert_eq!(chromatic_poly(&Graph::cycle(4)), IntPolynomial::from_i64("q", &[0, -3, 6, -4, 1]));
    }

    fn shape(parts: &[u32]) -> MultipartiteShape {
        MultipartiteShape::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn bb_arrangement_generic_and_special() {
        let a = bb_arrangement(&shape(&[2, 2, 2]), None).unwrap();
        assert_eq!(a.forms().len(), 6);
        let chi = char_poly(&intersection_poset(&a).unwrap());
        assert_eq!(chi, IntPolynomial::from_i64("q", &[-7, 12, -6, 1]));
        assert_eq!(poincare(&a).unwrap(), IntPolynomial::from_i64("t", &[1, 5, 7]));

        let s = bb_arrangement(&shape(&[2, 2, 2]), Some(&[1, 1, 1])).unwrap();
        let chi = char_poly(&intersection_poset(&s).unwrap());
        assert_eq!(chi, IntPolynomial::from_i64("q", &[-6, 11, -6, 1]));
        assert_eq!(poincare(&s).unwrap(), IntPolynomial::from_i64("t", &[1, 5, 6]));
    }

    #[test]
    fn bb_arrangement_rank_one_cases() {
        let a = bb_arrangement(&shape(&[2, 2]), None).unwrap();
        assert_eq!(a.forms().len(), 4);
        assert_eq!(poincare(&a).unwrap(), IntPolynomial::from_i64("t", &[1, 3]));
        // a = alpha_0 * alpha_1 makes two forms proportional: not an arrangement
        assert!(bb_arrangement(&shape(&[2, 2]), Some(&[1, 1])).unwrap_err().is_domain());
        assert!(bb_arrangement(&shape(&[3]), None).is_err());
        assert!(bb_arrangement(&shape(&[2, 3]), Some(&[1, 3])).unwrap_err().is_domain());
    }

    #[test]
    fn section_combinatorics_examples() {
        let s = generic_section_combinatorics(&bb_arrangement(&shape(&[2, 2, 2]), None).unwrap())
            .unwrap();
        assert_eq!(s, SectionCombinatorics {
            line_count: 6,
            multiple_points: vec![3, 3, 3],
            double_point_count: 6,
        });
        let s = generic_section_combinatorics(&bb_arrangement(&shape(&[3, 2, 2]), None).unwrap())
            .unwrap();
        assert_eq!(s, SectionCombinatorics {
            line_count: 7,
            multiple_points: vec![4, 3, 3],
            double_point_count: 9,
        });
        // braid K_3 has rank 2: rejected
        let central = braid_k3();
        let projectivized =
            HyperplaneArrangement::new(3, true, central.forms().to_vec()).unwrap();
        assert!(generic_section_combinatorics(&projectivized).unwrap_err().is_domain());
    }

    #[test]
    fn finite_field_counts_match_char_poly() {
        let braid = braid_k3();
        let chi = char_poly(&intersection_poset(&braid).unwrap());
        assert_eq!(count_points_mod_p(&braid, 11).unwrap(), 11 * 10 * 9);
        assert_eq!(chi.eval(&int(11)), int(11 * 10 * 9));

        let a = bb_arrangement(&shape(&[2, 2, 2]), None).unwrap();
        let chi = char_poly(&intersection_poset(&a).unwrap());
        let counted = count_points_mod_p(&a, 11).unwrap();
        assert_eq!(int(counted as i64), chi.eval(&int(11)));
    }
}
