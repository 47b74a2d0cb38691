//! Toric arrangements: symbolic parameter values, bifurcation sets, the
//! general-position family of hypertori in a fiber torus with its closed-form
//! characteristic polynomial and Betti numbers, an exhaustive component-poset
//! oracle, and the hyperplane/toric comparison for graphic arrangements.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, ToPrimitive, Zero};

use crate::exact::{
    int, poly_eval_substitute, rat, smith_normal_form, Int, IntMatrix, IntPolynomial,
    PoincareKind, Rat,
};
use crate::flag::{BettiVector, Field};
use crate::graphs::{Graph, MultipartiteShape};
use crate::hyper::{
    char_poly, chromatic_poly, graphic_arrangement, intersection_poset, HyperplaneArrangement,
    LinearForm,
};
use crate::poset::RankedPoset;
use crate::{Error, Result};

/// Alphabet of multiplicative parameters with optional finite orders
/// (declared roots of unity).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolTable {
    names: Vec<String>,
    orders: Vec<Option<u64>>,
}

impl SymbolTable {
    pub fn new() -> Self {
        SymbolTable::default()
    }

    pub fn add(&mut self, name: impl Into<String>, order: Option<u64>) -> usize {
        self.names.push(name.into());
        self.orders.push(order);
        self.names.len() - 1
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn order(&self, i: usize) -> Option<u64> {
        self.orders[i]
    }
}

/// A monomial in the symbols of a table, stored as an exponent vector that is
/// kept reduced modulo the declared symbol orders. Two values are equal as
/// complex numbers for every admissible parameter choice exactly when their
/// reduced vectors match.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SymbolicValue {
    exps: Vec<i64>,
}

impl SymbolicValue {
    fn reduced(mut exps: Vec<i64>, t: &SymbolTable) -> Self {
        for (e, i) in exps.iter_mut().zip(0..) {
            if let Some(order) = t.order(i) {
                *e = e.rem_euclid(order as i64);
            }
        }
        SymbolicValue { exps }
    }

    pub fn one(t: &SymbolTable) -> Self {
        SymbolicValue { exps: vec![0; t.len()] }
    }

    pub fn symbol(t: &SymbolTable, i: usize) -> Self {
        let mut exps = vec![0; t.len()];
        exps[i] = 1;
        SymbolicValue::reduced(exps, t)
    }

    pub fn mul(&self, other: &Self, t: &SymbolTable) -> Self {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        SymbolicValue::reduced(exps, t)
    }

    pub fn pow(&self, e: i64, t: &SymbolTable) -> Self {
        let exps = self.exps.iter().map(|a| a * e).collect();
        SymbolicValue::reduced(exps, t)
    }

    pub fn inv(&self, t: &SymbolTable) -> Self {
        self.pow(-1, t)
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    pub fn describe(&self, t: &SymbolTable) -> String {
        let terms: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    t.name(i).to_string()
                } else {
                    format!("{}^{}", t.name(i), e)
                }
            })
            .collect();
        if terms.is_empty() {
            String::from("1")
        } else {
            terms.join("*")
        }
    }
}

/// A character of the torus, x -> x_0^{d_0}*...*x_r^{d_r}, together with the
/// value it is set equal to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricCharacter {
    pub exponents: Vec<i64>,
    pub value: SymbolicValue,
}

impl ToricCharacter {
    pub fn new(exponents: Vec<i64>, value: SymbolicValue) -> Result<Self> {
        if exponents.iter().all(|&d| d == 0) {
            return Err(Error::domain("character exponents must not all vanish"));
        }
        Ok(ToricCharacter { exponents, value })
    }
}

/// Number of connected components of the translated subtorus cut by the
/// character: the gcd of its exponents.
pub fn component_count(c: &ToricCharacter) -> u64 {
    c.exponents.iter().fold(0u64, |g, &d| num_integer::gcd(g, d.unsigned_abs()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaRelations {
    /// Every alpha is an independent symbol.
    Generic,
    /// alpha_{i,j} = zeta^{j*L/m_i} for one root of unity zeta of order
    /// L = lcm(m_i); each part's values form the full group of m_i-th roots.
    RootsOfUnity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyMode {
    /// a is an independent symbol, off every bifurcation value.
    Generic,
    /// a = prod alpha_{i,j_i}^{d_i} for the given 1-based index tuple.
    Special(Vec<u32>),
}

/// The family of Sum(n_i - 1) hypertori x_i = alpha_{i,j} restricted to the
/// connected fiber torus x_0^{d_0}*...*x_r^{d_r} = a of dimension r.
#[derive(Debug, Clone)]
pub struct ParamToricFamily {
    shape: MultipartiteShape,
    weights: Vec<i64>,
    relations: AlphaRelations,
    mode: FamilyMode,
    table: SymbolTable,
    alphas: Vec<Vec<SymbolicValue>>,
    a_value: SymbolicValue,
}

impl ParamToricFamily {
    pub fn new(
        shape: MultipartiteShape,
        weights: Vec<i64>,
        relations: AlphaRelations,
        mode: FamilyMode,
    ) -> Result<Self> {
        let r = shape.r();
        if r < 1 {
            return Err(Error::domain("the family needs at least two parts"));
        }
        if weights.len() != r + 1 {
            return Err(Error::domain("weight tuple length must match the shape"));
        }
        if weights.iter().any(|&d| d < 1) {
            return Err(Error::domain("weights must be positive"));
        }
        if weights.iter().fold(0i64, |g, &d| num_integer::gcd(g, d)) != 1 {
            return Err(Error::domain("weights must have gcd 1 so the fiber torus is connected"));
        }
        let parts = shape.parts().to_vec();
        let mut table = SymbolTable::new();
        let mut alphas: Vec<Vec<SymbolicValue>> = Vec::with_capacity(r + 1);
        match relations {
            AlphaRelations::Generic => {
                let mut ids = Vec::new();
                for (i, &n) in parts.iter().enumerate() {
                    let mut row = Vec::new();
                    for j in 1..n {
                        row.push(table.add(format!("alpha{i}_{j}"), None));
                    }
                    ids.push(row);
                }
                for row in ids {
                    alphas.push(row.iter().map(|&id| SymbolicValue::symbol(&table, id)).collect());
                }
            }
            AlphaRelations::RootsOfUnity => {
                let l = parts
                    .iter()
                    .filter(|&&n| n > 1)
                    .fold(1u64, |l, &n| num_integer::lcm(l, (n - 1) as u64));
                let zeta = table.add("zeta", Some(l));
                for &n in &parts {
                    let m = (n - 1) as u64;
                    let row = (1..=m)
                        .map(|j| SymbolicValue::symbol(&table, zeta).pow((j * (l / m)) as i64, &table))
                        .collect();
                    alphas.push(if m == 0 { Vec::new() } else { row });
                }
            }
        }
        let a_id = table.add("a", None);
        for row in alphas.iter_mut() {
            for v in row.iter_mut() {
                v.exps.resize(table.len(), 0);
            }
        }
        let a_value = match &mode {
            FamilyMode::Generic => SymbolicValue::symbol(&table, a_id),
            FamilyMode::Special(indices) => {
                if indices.len() != r + 1 {
                    return Err(Error::domain("special index tuple length must match the shape"));
                }
                let mut v = SymbolicValue::one(&table);
                for (i, &j) in indices.iter().enumerate() {
                    if j == 0 || j >= parts[i] {
                        return Err(Error::domain("special index out of range"));
                    }
                    v = v.mul(&alphas[i][j as usize - 1].pow(weights[i], &table), &table);
                }
                v
            }
        };
        Ok(ParamToricFamily { shape, weights, relations, mode, table, alphas, a_value })
    }

    pub fn shape(&self) -> &MultipartiteShape {
        &self.shape
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn relations(&self) -> AlphaRelations {
        self.relations
    }

    pub fn mode(&self) -> &FamilyMode {
        &self.mode
    }

    pub fn table(&self) -> &SymbolTable {
        &self.table
    }

    pub fn r(&self) -> usize {
        self.shape.r()
    }

    /// n_i - 1, the number of hypertori in coordinate i.
    pub fn m_i(&self, i: usize) -> u64 {
        (self.shape.parts()[i] - 1) as u64
    }

    pub fn m(&self) -> u64 {
        (0..=self.r()).map(|i| self.m_i(i)).product()
    }

    /// alpha_{i,j}, 1-based in j.
    pub fn alpha(&self, i: usize, j: u32) -> &SymbolicValue {
        &self.alphas[i][j as usize - 1]
    }

    pub fn a_value(&self) -> &SymbolicValue {
        &self.a_value
    }

    pub fn character(&self) -> ToricCharacter {
        ToricCharacter { exponents: self.weights.clone(), value: self.a_value.clone() }
    }

    /// gcd of the weights outside I.
    fn d_complement(&self, members: u64) -> i64 {
        let mut g = 0i64;
        for i in 0..=self.r() {
            if members >> i & 1 == 0 {
                g = num_integer::gcd(g, self.weights[i]);
            }
        }
        g
    }

    /// All 1-based index tuples over the coordinates in `coords`.
    fn tuples(&self, coords: &[usize]) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for &i in coords {
            let m = self.m_i(i) as u32;
            let mut grown = Vec::with_capacity(out.len() * m as usize);
            for stem in &out {
                for j in 1..=m {
                    let mut next = stem.clone();
                    next.push(j);
                    grown.push(next);
                }
            }
            out = grown;
        }
        out
    }

    fn product_value(&self, coords: &[usize], tuple: &[u32]) -> SymbolicValue {
        let mut v = SymbolicValue::one(&self.table);
        for (&i, &j) in coords.iter().zip(tuple) {
            v = v.mul(&self.alpha(i, j).pow(self.weights[i], &self.table), &self.table);
        }
        v
    }

    /// The distinct-powers condition: within each coordinate the values
    /// alpha_{i,j}^{d_i} are pairwise distinct.
    fn check_distinct_powers(&self) -> Result<()> {
        for i in 0..=self.r() {
            let powers: Vec<SymbolicValue> = (1..=self.m_i(i) as u32)
                .map(|j| self.alpha(i, j).pow(self.weights[i], &self.table))
                .collect();
            for a in 0..powers.len() {
                for b in a + 1..powers.len() {
                    if powers[a] == powers[b] {
                        return Err(Error::domain(
                            "two alpha values in one coordinate share the same power",
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

fn guard_tuple_count(f: &ParamToricFamily) -> Result<()> {
    if f.m() > 4_000_000 {
        return Err(Error::domain("too many index tuples to enumerate"));
    }
    Ok(())
}

/// Deduplicated set of bifurcation values of the product map.
#[derive(Debug, Clone)]
pub struct BifurcationReport {
    pub lambda_values: Vec<SymbolicValue>,
    /// Generic count prod(n_i - 1).
    pub m: u64,
    /// Number of distinct values under the declared relations.
    pub m_prime: usize,
}

pub fn bifurcation_set(f: &ParamToricFamily) -> Result<BifurcationReport> {
    guard_tuple_count(f)?;
    let coords: Vec<usize> = (0..=f.r()).collect();
    let mut values = BTreeSet::new();
    for tuple in f.tuples(&coords) {
        values.insert(f.product_value(&coords, &tuple));
    }
    let lambda_values: Vec<SymbolicValue> = values.into_iter().collect();
    let m_prime = lambda_values.len();
    Ok(BifurcationReport { lambda_values, m: f.m(), m_prime })
}

/// Closed-form characteristic polynomial of the family's component poset.
/// Generic mode: coefficient of q^{r-k} is (-1)^k * sum over |I| = k of
/// d_Ibar * m_I. Special mode: identical except the free term, whose absolute
/// value drops by the number of index tuples realizing the special value.
pub fn family_charpoly(f: &ParamToricFamily) -> Result<IntPolynomial> {
    let r = f.r();
    let mut coeffs = vec![Int::zero(); r + 1];
    for mask in 0u64..(1 << (r + 1)) {
        let k = mask.count_ones() as usize;
        if k > r {
            continue;
        }
        let m_i: u64 = (0..=r).filter(|&i| mask >> i & 1 == 1).map(|i| f.m_i(i)).product();
        let term = int(f.d_complement(mask)) * int(m_i as i64);
        let signed = if k % 2 == 0 { term } else { -term };
        coeffs[r - k] += signed;
    }
    if let FamilyMode::Special(_) = f.mode() {
        f.check_distinct_powers()?;
        guard_tuple_count(f)?;
        let coords: Vec<usize> = (0..=r).collect();
        let hits = f
            .tuples(&coords)
            .iter()
            .filter(|t| f.product_value(&coords, t) == *f.a_value())
            .count();
        if hits == 0 {
            return Err(Error::internal("special value not realized by any index tuple"));
        }
        let drop = if r % 2 == 0 { -int(hits as i64) } else { int(hits as i64) };
        coeffs[0] += drop;
    }
    Ok(IntPolynomial::new("q", coeffs))
}

/// Poincaré polynomial of a toric arrangement complement from its
/// characteristic polynomial.
pub fn toric_poincare(chi: &IntPolynomial, ambient_dim: usize) -> Result<IntPolynomial> {
    poly_eval_substitute(chi, PoincareKind::Toric { ambient_dim })
}

/// Betti numbers of the generic fiber complement: the binomial formula over
/// the closed-form coefficients, cross-checked against the Poincaré
/// substitution of the characteristic polynomial.
pub fn family_betti(f: &ParamToricFamily) -> Result<BettiVector> {
    if !matches!(f.mode(), FamilyMode::Generic) {
        return Err(Error::domain("Betti vectors are computed for generic families"));
    }
    let r = f.r();
    // c_level[l] = sum over |I| = r - l of d_Ibar * m_I
    let mut c_level = vec![Int::zero(); r + 1];
    for mask in 0u64..(1 << (r + 1)) {
        let k = mask.count_ones() as usize;
        if k > r {
            continue;
        }
        let m_i: u64 = (0..=r).filter(|&i| mask >> i & 1 == 1).map(|i| f.m_i(i)).product();
        c_level[r - k] += int(f.d_complement(mask)) * int(m_i as i64);
    }
    let mut betti = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let mut b = Int::zero();
        for l in (r - i)..=r {
            b += crate::exact::binomial(l, r - i) * &c_level[l];
        }
        betti.push(b.to_usize().ok_or_else(|| Error::internal("negative Betti number"))?);
    }
    let p = toric_poincare(&family_charpoly(f)?, r)?;
    let from_poincare: Vec<usize> =
        (0..=r).map(|i| p.coeff(i).to_usize().unwrap_or(usize::MAX)).collect();
    if betti != from_poincare {
        return Err(Error::internal("Betti formula disagrees with the Poincaré substitution"));
    }
    Ok(BettiVector { field: Field::Rationals, betti })
}

/// Exhaustive connected-component poset of the family: every intersection of
/// hypertori inside the fiber torus, split into components, with containments
/// and Möbius values. Positive-dimensional intersections over an index set I
/// have d_Ibar components; zero-dimensional ones are finite point sets whose
/// points on the special value are identified across intersections. Component
/// labels within a flat are conventional; every consistent labelling yields
/// the same poset invariants.
pub fn brute_force_family_poset(f: &ParamToricFamily) -> Result<RankedPoset> {
    let r = f.r();
    if f.shape().total_vertices() > 10 {
        return Err(Error::domain("family too large for the exhaustive poset"));
    }
    if let FamilyMode::Special(_) = f.mode() {
        f.check_distinct_powers()?;
    }
    let mut items: Vec<(usize, String, Option<crate::exact::Rref>)> =
        vec![(r, String::from("torus"), None)];
    let mut covers: Vec<(usize, usize)> = Vec::new();
    // positive-dimensional components keyed by (coordinate set, tuple, class)
    let mut component_ids: BTreeMap<(Vec<usize>, Vec<u32>, u64), usize> = BTreeMap::new();
    let subsets_of_size = |k: usize| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u64..(1 << (r + 1)) {
            if mask.count_ones() as usize == k {
                out.push((0..=r).filter(|&i| mask >> i & 1 == 1).collect());
            }
        }
        out
    };
    let mask_of = |coords: &[usize]| coords.iter().fold(0u64, |m, &i| m | 1 << i);
    for k in 1..r {
        for coords in subsets_of_size(k) {
            let d_comp = f.d_complement(mask_of(&coords)) as u64;
            for tuple in f.tuples(&coords) {
                for class in 0..d_comp {
                    let label = format!(
                        "I={{{}}} j=({}) c={}",
                        coords.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
                        tuple.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
                        class
                    );
                    items.push((r - k, label, None));
                    let node = items.len() - 1;
                    component_ids.insert((coords.clone(), tuple.clone(), class), node);
                    if k == 1 {
                        covers.push((0, node));
                    } else {
                        for drop_pos in 0..coords.len() {
                            let mut sub_coords = coords.clone();
                            sub_coords.remove(drop_pos);
                            let mut sub_tuple = tuple.clone();
                            sub_tuple.remove(drop_pos);
                            let parent_d = f.d_complement(mask_of(&sub_coords)) as u64;
                            let parent = component_ids
                                [&(sub_coords, sub_tuple, class % parent_d)];
                            covers.push((parent, node));
                        }
                    }
                }
            }
        }
    }
    // zero-dimensional intersections: one coordinate p stays free
    let mut special_points: BTreeMap<Vec<u32>, (usize, u64)> = BTreeMap::new();
    let mut link_point = |node: usize,
                          coords: &[usize],
                          tuple: &[u32],
                          class: u64,
                          covers: &mut Vec<(usize, usize)>,
                          component_ids: &BTreeMap<(Vec<usize>, Vec<u32>, u64), usize>| {
        if r == 1 {
            covers.push((0, node));
            return;
        }
        for drop_pos in 0..coords.len() {
            let mut sub_coords = coords.to_vec();
            sub_coords.remove(drop_pos);
            let mut sub_tuple = tuple.to_vec();
            sub_tuple.remove(drop_pos);
            let parent_d = f.d_complement(mask_of(&sub_coords)) as u64;
            let parent = component_ids[&(sub_coords, sub_tuple, class % parent_d)];
            covers.push((parent, node));
        }
    };
    for coords in subsets_of_size(r) {
        let p = (0..=r).find(|i| !coords.contains(i)).expect("one free coordinate");
        let d_p = f.weights[p] as u64;
        for tuple in f.tuples(&coords) {
            // which root index (if any) lands the point set on the special value
            let base = f.product_value(&coords, &tuple);
            let hit = (1..=f.m_i(p) as u32).find(|&j| {
                base.mul(&f.alpha(p, j).pow(f.weights[p], f.table()), f.table()) == *f.a_value()
            });
            let occupied = match hit {
                None => None,
                Some(j) => {
                    let mut full = Vec::with_capacity(r + 1);
                    let mut it = coords.iter().zip(&tuple);
                    for i in 0..=r {
                        if i == p {
                            full.push(j);
                        } else {
                            let (_, &jj) = it.next().expect("tuple entry");
                            full.push(jj);
                        }
                    }
                    let (node, class) = match special_points.get(&full) {
                        Some(&hit) => hit,
                        None => {
                            let class = special_points.len() as u64;
                            let label = format!(
                                "pt j=({})",
                                full.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
                            );
                            items.push((0, label, None));
                            let node = items.len() - 1;
                            special_points.insert(full.clone(), (node, class));
                            (node, class)
                        }
                    };
                    link_point(node, &coords, &tuple, class, &mut covers, &component_ids);
                    Some(class % d_p)
                }
            };
            let mut anon = 0u64;
            for slot in 0..d_p {
                if occupied == Some(slot) {
                    continue;
                }
                let label = format!(
                    "pt I={{{}}} j=({}) k={}",
                    coords.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
                    tuple.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
                    anon
                );
                items.push((0, label, None));
                let node = items.len() - 1;
                link_point(node, &coords, &tuple, slot, &mut covers, &component_ids);
                anon += 1;
            }
        }
    }
    RankedPoset::from_covers(items, covers, 0)
}

/// Both sides of the hyperplane/toric comparison for a graph.
#[derive(Debug, Clone)]
pub struct ToricComparison {
    pub hyperplane_charpoly: IntPolynomial,
    pub toric_charpoly: IntPolynomial,
    /// Sign with chi_A(q) = epsilon * chi_T(q-1), if either sign matches.
    pub epsilon: Option<i8>,
}

/// Intersection poset of the connected subtori x_i = x_j of the edges of `g`,
/// with the component count of every flat certified to be 1 by Smith normal
/// form of its exponent lattice.
pub fn subtorus_poset(g: &Graph) -> Result<RankedPoset> {
    let n = g.vertices();
    let arrangement = graphic_arrangement(g)?;
    let poset = intersection_poset(&arrangement)?;
    for node in poset.nodes() {
        let witness = node.witness.as_ref().expect("arrangement nodes carry witnesses");
        let rows: Vec<Vec<Int>> = g
            .edges()
            .iter()
            .filter(|&&(u, v)| {
                let mut coeffs = vec![Rat::zero(); n];
                coeffs[u as usize] = Rat::one();
                coeffs[v as usize] = -Rat::one();
                witness.implies(&coeffs, &Rat::zero())
            })
            .map(|&(u, v)| {
                let mut row = vec![Int::zero(); n];
                row[u as usize] = Int::one();
                row[v as usize] = -Int::one();
                row
            })
            .collect();
        if !rows.is_empty() {
            let matrix = IntMatrix::from_rows(rows)?;
            let snf = smith_normal_form(&matrix)?;
            let components: Int = snf.torsion().iter().product();
            if components > Int::one() {
                return Err(Error::internal("disconnected subtorus in a graphic exponent lattice"));
            }
        }
    }
    Ok(poset)
}

/// Hyperplane arrangement (coordinate hyperplanes plus edge differences)
/// against the toric arrangement of the same edges: both characteristic
/// polynomials and the matching shift sign.
pub fn hyperplane_toric_compare(g: &Graph) -> Result<ToricComparison> {
    if g.vertices() == 0 {
        return Err(Error::domain("the comparison needs a non-empty graph"));
    }
    let n = g.vertices();
    let mut forms = Vec::with_capacity(n + g.edge_count());
    for i in 0..n {
        let mut coeffs = vec![Rat::zero(); n];
        coeffs[i] = Rat::one();
        forms.push(LinearForm::new(coeffs, Rat::zero())?);
    }
    for &(u, v) in g.edges() {
        let mut coeffs = vec![Rat::zero(); n];
        coeffs[u as usize] = Rat::one();
        coeffs[v as usize] = -Rat::one();
        forms.push(LinearForm::new(coeffs, Rat::zero())?);
    }
    let a = HyperplaneArrangement::new(n, false, forms)?;
    let hyperplane_charpoly = char_poly(&intersection_poset(&a)?);
    let toric_charpoly = char_poly(&subtorus_poset(g)?);
    if toric_charpoly != chromatic_poly(g) {
        return Err(Error::internal("subtorus poset disagrees with the chromatic oracle"));
    }
    let shifted = toric_charpoly.compose(&IntPolynomial::from_i64("q", &[-1, 1]));
    let epsilon = if hyperplane_charpoly == shifted {
        Some(1)
    } else if hyperplane_charpoly == shifted.neg() {
        Some(-1)
    } else {
        None
    };
    Ok(ToricComparison { hyperplane_charpoly, toric_charpoly, epsilon })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(
        parts: &[u32],
        weights: &[i64],
        relations: AlphaRelations,
        mode: FamilyMode,
    ) -> Result<ParamToricFamily> {
        ParamToricFamily::new(
            MultipartiteShape::new(parts.to_vec()).unwrap(),
            weights.to_vec(),
            relations,
            mode,
        )
    }

    #[test]
    fn component_counts() {
        let t = SymbolTable::new();
        let one = SymbolicValue::one(&t);
        for (d, expected) in
            [(vec![2, 4, 6], 2), (vec![1, 5, 9], 1), (vec![6, 10, 15], 1), (vec![-4, 6], 2)]
        {
            let c = ToricCharacter::new(d, one.clone()).unwrap();
            assert_eq!(component_count(&c), expected);
        }
        assert!(ToricCharacter::new(vec![0, 0], one).is_err());
    }

    #[test]
    fn poincare_substitutions() {
        let chi = IntPolynomial::from_i64("q", &[3, -3, 1]);
        assert_eq!(toric_poincare(&chi, 2).unwrap(), IntPolynomial::from_i64("t", &[1, 5, 7]));
        let chi = IntPolynomial::from_i64("q", &[2, -3, 1]);
        assert_eq!(toric_poincare(&chi, 2).unwrap(), IntPolynomial::from_i64("t", &[1, 5, 6]));
        let chi = IntPolynomial::monomial("q", int(1), 3);
        assert_eq!(toric_poincare(&chi, 3).unwrap(), IntPolynomial::from_i64("t", &[1]));
    }

    #[test]
    fn bifurcation_reports() {
        let f = family(&[2, 2, 2], &[1, 1, 1], AlphaRelations::Generic, FamilyMode::Generic)
            .unwrap();
        let b = bifurcation_set(&f).unwrap();
        assert_eq!((b.m, b.m_prime), (1, 1));
        assert_eq!(b.lambda_values[0].describe(f.table()), "alpha0_1*alpha1_1*alpha2_1");

        let f = family(
            &[3, 3, 3, 3],
            &[1, 1, 1, 1],
            AlphaRelations::RootsOfUnity,
            FamilyMode::Generic,
        )
        .unwrap();
        let b = bifurcation_set(&f).unwrap();
        assert_eq!((b.m, b.m_prime), (16, 2));

        let f = family(&[2, 2], &[1, 1], AlphaRelations::Generic, FamilyMode::Generic).unwrap();
        let b = bifurcation_set(&f).unwrap();
        assert_eq!((b.m, b.m_prime), (1, 1));
    }

    #[test]
    fn closed_form_charpolys() {
        let f = family(&[2, 2, 2], &[1, 1, 1], AlphaRelations::Generic, FamilyMode::Generic)
            .unwrap();
        assert_eq!(family_charpoly(&f).unwrap(), IntPolynomial::from_i64("q", &[3, -3, 1]));

        let f = family(
            &[2, 2, 2],
            &[1, 1, 1],
            AlphaRelations::Generic,
            FamilyMode::Special(vec![1, 1, 1]),
        )
        .unwrap();
        assert_eq!(family_charpoly(&f).unwrap(), IntPolynomial::from_i64("q", &[2, -3, 1]));

        let f = family(&[2, 2, 2], &[1, 2, 3], AlphaRelations::Generic, FamilyMode::Generic)
            .unwrap();
        assert_eq!(family_charpoly(&f).unwrap(), IntPolynomial::from_i64("q", &[6, -3, 1]));

        // two tuples share the special value under the order-2 relation
        let f = family(
            &[3, 3],
            &[1, 1],
            AlphaRelations::RootsOfUnity,
            FamilyMode::Special(vec![1, 1]),
        )
        .unwrap();
        assert_eq!(family_charpoly(&f).unwrap(), IntPolynomial::from_i64("q", &[-2, 1]));
    }

    #[test]
    fn distinct_power_check() {
        // alpha^2 collapses both order-2 roots to 1
        let f = family(
            &[3, 3],
            &[2, 1],
            AlphaRelations::RootsOfUnity,
            FamilyMode::Special(vec![1, 1]),
        )
        .unwrap();
        assert!(family_charpoly(&f).unwrap_err().is_domain());
        assert!(brute_force_family_poset(&f).unwrap_err().is_domain());
    }

    #[test]
    fn betti_vectors() {
        let f = family(&[2, 2, 2], &[1, 1, 1], AlphaRelations::Generic, FamilyMode::Generic)
            .unwrap();
        assert_eq!(family_betti(&f).unwrap().betti, vec![1, 5, 7]);
        let f = family(&[2, 2, 2], &[1, 2, 3], AlphaRelations::Generic, FamilyMode::Generic)
            .unwrap();
        assert_eq!(family_betti(&f).unwrap().betti, vec![1, 5, 10]);
        let f = family(&[2, 2, 2, 2], &[1, 1, 1, 1], AlphaRelations::Generic, FamilyMode::Generic)
            .unwrap();
        assert_eq!(family_betti(&f).unwrap().betti, vec![1, 7, 17, 15]);
        let f = family(
            &[2, 2, 2],
            &[1, 1, 1],
            AlphaRelations::Generic,
            FamilyMode::Special(vec![1, 1, 1]),
        )
        .unwrap();
        assert!(family_betti(&f).unwrap_err().is_domain());
    }

    #[test]
    fn oracle_matches_closed_form() {
        let cases: [(&[u32], &[i64], FamilyMode); 6] = [
            (&[2, 2, 2], &[1, 1, 1], FamilyMode::Generic),
            (&[2, 2, 2], &[1, 1, 1], FamilyMode::Special(vec![1, 1, 1])),
            (&[2, 2, 2], &[1, 2, 3], FamilyMode::Generic),
            (&[2, 2], &[1, 1], FamilyMode::Generic),
            (&[2, 2], &[1, 1], FamilyMode::Special(vec![1, 1])),
            (&[2, 2, 2, 2], &[1, 1, 1, 1], FamilyMode::Generic),
        ];
        for (parts, weights, mode) in cases {
            let f = family(parts, weights, AlphaRelations::Generic, mode.clone()).unwrap();
            let poset = brute_force_family_poset(&f).unwrap();
            assert_eq!(
                poset.char_poly("q"),
                family_charpoly(&f).unwrap(),
                "{parts:?} {weights:?} {mode:?}"
            );
        }
        let f = family(
            &[3, 3],
            &[1, 1],
            AlphaRelations::RootsOfUnity,
            FamilyMode::Special(vec![1, 1]),
        )
        .unwrap();
        let poset = brute_force_family_poset(&f).unwrap();
        assert_eq!(poset.char_poly("q"), IntPolynomial::from_i64("q", &[-2, 1]));
        assert!(
            family(&[3, 3, 3, 3], &[1, 1, 1, 1], AlphaRelations::Generic, FamilyMode::Generic)
                .and_then(|f| brute_force_family_poset(&f))
                .unwrap_err()
                .is_domain()
        );
    }

    #[test]
    fn weight_validation() {
        assert!(family(&[2, 2], &[2, 2], AlphaRelations::Generic, FamilyMode::Generic).is_err());
        assert!(family(&[2, 2], &[1, 0], AlphaRelations::Generic, FamilyMode::Generic).is_err());
        assert!(family(&[2, 2], &[1], AlphaRelations::Generic, FamilyMode::Generic).is_err());
        assert!(family(&[4], &[1], AlphaRelations::Generic, FamilyMode::Generic).is_err());
        assert!(
            family(&[2, 2], &[1, 1], AlphaRelations::Generic, FamilyMode::Special(vec![1, 2]))
                .is_err()
        );
    }

    #[test]
    fn comparison_triangle_and_edge() {
        let c = hyperplane_toric_compare(&Graph::complete(3)).unwrap();
        assert_eq!(c.hyperplane_charpoly, IntPolynomial::from_i64("q", &[-6, 11, -6, 1]));
        assert_eq!(c.toric_charpoly, IntPolynomial::from_i64("q", &[0, 2, -3, 1]));
        assert_eq!(c.epsilon, Some(1));

        let c = hyperplane_toric_compare(&Graph::complete(2)).unwrap();
        assert_eq!(c.hyperplane_charpoly, IntPolynomial::from_i64("q", &[2, -3, 1]));
        assert_eq!(c.toric_charpoly, IntPolynomial::from_i64("q", &[0, -1, 1]));
        assert_eq!(c.epsilon, Some(1));

        let c = hyperplane_toric_compare(&Graph::edgeless(3)).unwrap();
        assert_eq!(c.epsilon, Some(1));
    }

    #[test]
    fn symbolic_reduction() {
        let mut t = SymbolTable::new();
        let z = t.add("zeta", Some(6));
        let a = t.add("a", None);
        let zeta = SymbolicValue::symbol(&t, z);
        assert_eq!(zeta.pow(6, &t), SymbolicValue::one(&t));
        assert_eq!(zeta.pow(4, &t).mul(&zeta.pow(2, &t), &t), SymbolicValue::one(&t));
        assert_ne!(SymbolicValue::symbol(&t, a), SymbolicValue::one(&t));
        assert_eq!(zeta.inv(&t), zeta.pow(5, &t));
        assert_eq!(zeta.pow(7, &t).describe(&t), "zeta");
    }
}
