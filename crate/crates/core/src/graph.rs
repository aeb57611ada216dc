//! The excess-zero graph: involutions joined when their lengths add.
//!
//! Two involutions `x`, `y` are adjacent iff `ℓ(xy) = ℓ(x) + ℓ(y)`. Since
//! `ℓ(xy) = ℓ(x) + ℓ(y) − 2|N(x) ∩ N(y⁻¹)|` and `y⁻¹ = y`, adjacency is
//! disjointness of N-sets, which is one bitset intersection per pair.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::finite::{Element, FiniteGroup};
use crate::spec::GroupSpec;
use crate::word::Word;

/// Non-identity involutions sorted by `(length, least reduced word)`.
#[derive(Debug, Clone)]
pub struct InvolutionSet {
    elements: Vec<Element>,
    words: Vec<Word>,
    lengths: Vec<usize>,
    by_length: BTreeMap<usize, Vec<usize>>,
    index: HashMap<Element, usize>,
}

impl InvolutionSet {
    /// Every `w ≠ 1` with `w² = 1`, found by walking the whole group.
    pub fn enumerate(group: &FiniteGroup) -> Self {
        let mut found = Vec::new();
        group.for_each_layer(|len, layer| {
            if len > 0 {
                found.extend(layer.iter().filter(|w| group.is_involution(w)).cloned());
            }
        });
        let mut entries: Vec<(usize, Word, Element)> =
            found.into_par_iter().map(|w| (group.length(&w), group.reduced_word(&w), w)).collect();
        entries.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        Self::from_sorted(entries)
    }

    fn from_sorted(entries: Vec<(usize, Word, Element)>) -> Self {
        let mut set = InvolutionSet {
            elements: Vec::with_capacity(entries.len()),
            words: Vec::with_capacity(entries.len()),
            lengths: Vec::with_capacity(entries.len()),
            by_length: BTreeMap::new(),
            index: HashMap::with_capacity(entries.len()),
        };
        for (i, (len, word, w)) in entries.into_iter().enumerate() {
            set.by_length.entry(len).or_default().push(i);
            set.index.insert(w.clone(), i);
            set.elements.push(w);
            set.words.push(word);
            set.lengths.push(len);
        }
        set
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn by_length(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.by_length
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.index.get(w).copied()
    }
}

/// Degree multiset, written `i^k` for `k` vertices of valency `i`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValencyDistribution(BTreeMap<usize, usize>);

impl ValencyDistribution {
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut map = BTreeMap::new();
        for d in degrees {
            *map.entry(d).or_insert(0) += 1;
        }
        ValencyDistribution(map)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        ValencyDistribution(pairs.into_iter().filter(|&(_, c)| c > 0).collect())
    }

    /// `(valency, count)` with valencies strictly increasing.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.0.iter().map(|(&v, &c)| (v, c)).collect()
    }

    pub fn count(&self, valency: usize) -> usize {
        self.0.get(&valency).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("valency,count\n");
        for (v, c) in &self.0 {
            out.push_str(&format!("{v},{c}\n"));
        }
        out
    }

    /// Cells present on only one side, as `(valency, self count, other count)`.
    pub fn diff(&self, other: &ValencyDistribution) -> Vec<(usize, usize, usize)> {
        let mut keys: Vec<usize> = self.0.keys().chain(other.0.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter(|k| self.count(*k) != other.count(*k))
            .map(|k| (k, self.count(k), other.count(k)))
            .collect()
    }
}

impl fmt::Display for ValencyDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, c)| format!("{v}^{c}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// Parses dotted exponent notation as printed in tables, e.g.
/// `0^1.1^3.3^{13}`. An exponent is a braced group or a digit run; a run that
/// runs straight into the next `^` is read TeX-style as a single digit, so
/// `59^{10}115^6` is `59^10 . 115^6` while `3^13.4^2` keeps its two-digit
/// exponent. Separators (`.`, `\cdot`, `·`, whitespace, `$`) are optional.
impl FromStr for ValencyDistribution {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let cleaned = text.replace("\\cdot", ".").replace('·', ".");
        let bytes: Vec<char> = cleaned.chars().collect();
        let mut pos = 0;
        let mut map = BTreeMap::new();
        let skip = |pos: &mut usize| {
            while *pos < bytes.len() && matches!(bytes[*pos], '.' | ' ' | '$' | '\t' | '\n') {
                *pos += 1;
            }
        };
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        loop {
            skip(&mut pos);
            if pos >= bytes.len() {
                break;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err(pos, "expected a valency"));
            }
            let valency: usize = bytes[start..pos].iter().collect::<String>().parse().expect("digits");
            while pos < bytes.len() && bytes[pos] == ' ' {
                pos += 1;
            }
            if pos >= bytes.len() || bytes[pos] != '^' {
                return Err(err(pos, "expected '^'"));
            }
            pos += 1;
            while pos < bytes.len() && bytes[pos] == ' ' {
                pos += 1;
            }
            let count: usize = if pos < bytes.len() && bytes[pos] == '{' {
                let close = bytes[pos..].iter().position(|&c| c == '}').ok_or_else(|| err(pos, "unclosed '{'"))?;
                let inner: String = bytes[pos + 1..pos + close].iter().collect();
                pos += close + 1;
                inner.trim().parse().map_err(|_| err(pos, "bad exponent"))?
            } else if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                let run = bytes[pos..].iter().take_while(|c| c.is_ascii_digit()).count();
                // A digit run running straight into the next `^` is a TeX
                // single-digit exponent followed by the next valency.
                let len = if bytes.get(pos + run) == Some(&'^') { 1 } else { run };
                let count = bytes[pos..pos + len].iter().collect::<String>();
                pos += len;
                count.parse().map_err(|_| err(pos, "bad exponent"))?
            } else {
                return Err(err(pos, "expected an exponent"));
            };
            if map.insert(valency, count).is_some() {
                return Err(err(start, "valency listed twice"));
            }
        }
        Ok(ValencyDistribution(map))
    }
}

/// The excess-zero graph of a finite group.
#[derive(Debug, Clone)]
pub struct E0Graph {
    spec: GroupSpec,
    vertices: InvolutionSet,
    nsets: Vec<FixedBitSet>,
    adjacency: Vec<FixedBitSet>,
    w0: Option<usize>,
}

impl E0Graph {
    /// Builds the graph. Rows are filled in parallel from the immutable N-set
    /// table.
    pub fn build(group: &FiniteGroup) -> Self {
        Self::from_involutions(group, InvolutionSet::enumerate(group))
    }

    pub fn from_involutions(group: &FiniteGroup, vertices: InvolutionSet) -> Self {
        let nsets: Vec<FixedBitSet> = vertices.elements().iter().map(|w| group.n_set_bits(w)).collect();
        let v = nsets.len();
        let adjacency: Vec<FixedBitSet> = (0..v)
            .into_par_iter()
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(v);
                for j in 0..v {
                    if i != j && nsets[i].is_disjoint(&nsets[j]) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let w0 = vertices.index_of(&group.longest_element());
        E0Graph { spec: group.spec().clone(), vertices, nsets, adjacency, w0 }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn vertices(&self) -> &InvolutionSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Vertex index of `w_0`, when `w_0` is an involution (always, for a
    /// finite group of positive rank).
    pub fn w0(&self) -> Option<usize> {
        self.w0
    }

    pub fn n_set(&self, i: usize) -> &FixedBitSet {
        &self.nsets[i]
    }

    pub fn is_adjacent_index(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|i| self.degree(i)).collect()
    }

    pub fn vertex(&self, w: &Element) -> Result<usize> {
        self.vertices.index_of(w).ok_or_else(|| Error::NotAVertex(format!("{w:?}")))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.vertex_count() {
            out.extend(self.adjacency[i].ones().filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }

    pub fn valency_distribution(&self) -> ValencyDistribution {
        ValencyDistribution::from_degrees(self.degrees())
    }

    /// `Δ₁(x)` as vertex indices.
    pub fn neighborhood_indices(&self, i: usize) -> Vec<usize> {
        self.adjacency[i].ones().collect()
    }

    /// `Δ₁(x)`.
    pub fn neighborhood(&self, x: &Element) -> Result<Vec<Element>> {
        let i = self.vertex(x)?;
        Ok(self.neighborhood_indices(i).into_iter().map(|j| self.vertices.element(j).clone()).collect())
    }

    /// Vertices of valency exactly one.
    pub fn pendant_indices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&i| self.degree(i) == 1).collect()
    }

    pub fn pendant_elements(&self) -> Vec<Element> {
        self.pendant_indices().into_iter().map(|i| self.vertices.element(i).clone()).collect()
    }

    /// Connected components via union-find, each sorted, ordered by least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let v = self.vertex_count();
        let mut uf = UnionFind::<usize>::new(v);
        for (i, j) in self.edges() {
            uf.union(i, j);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..v {
            groups.entry(uf.find(i)).or_default().push(i);
        }
        let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let v = self.vertex_count();
        let mut dist = vec![None; v];
        let mut visited = FixedBitSet::with_capacity(v);
        let mut frontier = FixedBitSet::with_capacity(v);
        visited.insert(source);
        frontier.insert(source);
        dist[source] = Some(0);
        let mut d = 0;
        while !frontier.is_clear() {
            d += 1;
            let mut next = FixedBitSet::with_capacity(v);
            for i in frontier.ones() {
                next.union_with(&self.adjacency[i]);
            }
            next.difference_with(&visited);
            for j in next.ones() {
                dist[j] = Some(d);
            }
            visited.union_with(&next);
            frontier = next;
        }
        dist
    }

    pub fn distance(&self, a: usize, b: usize) -> Option<usize> {
        self.distances_from(a)[b]
    }

    /// Components and the diameter of the component avoiding `w_0`.
    pub fn components_and_diameter(&self) -> Result<(Vec<Vec<usize>>, usize)> {
        let comps = self.components();
        let hat: Vec<&Vec<usize>> = comps.iter().filter(|c| self.w0.is_none_or(|w0| !c.contains(&w0))).collect();
        match hat.as_slice() {
            [] => Err(Error::DiameterUndefined(format!("{}: only w0 is an involution", self.spec))),
            [one] => {
                let diameter = one
                    .par_iter()
                    .map(|&s| {
                        let dist = self.distances_from(s);
                        one.iter().map(|&t| dist[t].expect("same component")).max().unwrap_or(0)
                    })
                    .max()
                    .unwrap_or(0);
                Ok((comps, diameter))
            }
            _ => Err(Error::DiameterUndefined(format!("{}: {} components avoid w0", self.spec, hat.len()))),
        }
    }
}

/// Whether two involutions are adjacent: `N(x) ∩ N(y) = ∅`.
pub fn is_adjacent(group: &FiniteGroup, x: &Element, y: &Element) -> bool {
    let n = group.positive_count();
    let (xi, yi) = (x.images(), y.images());
    (0..n).all(|i| (xi[i] as usize) < n || (yi[i] as usize) < n)
}

/// `e(w) = min{ℓ(x) + ℓ(y) − ℓ(w) : w = xy, x² = y² = 1}`.
///
/// `x` runs over the identity then the involutions by length; `y = xw`. Stops
/// at the first zero.
pub fn excess(group: &FiniteGroup, involutions: &InvolutionSet, w: &Element) -> usize {
    let lw = group.length(w);
    let candidates = std::iter::once(group.identity()).chain(involutions.elements().iter().cloned());
    let mut best = usize::MAX;
    for x in candidates {
        let y = group.mul(&x, w);
        if !(group.is_identity(&y) || group.is_involution(&y)) {
            continue;
        }
        let value = group.length(&x) + group.length(&y) - lw;
        best = best.min(value);
        if best == 0 {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;

    fn graph(label: &str) -> (FiniteGroup, E0Graph) {
        let g = FiniteGroup::from_label(label).unwrap();
        let e = E0Graph::build(&g);
        (g, e)
    }

    #[test]
    fn involution_counts() {
        assert_eq!(InvolutionSet::enumerate(&FiniteGroup::from_label("A3").unwrap()).len(), 9);
        assert_eq!(InvolutionSet::enumerate(&FiniteGroup::from_label("A6").unwrap()).len(), 231);
        assert_eq!(InvolutionSet::enumerate(&FiniteGroup::from_label("I2(4)").unwrap()).len(), 5);
    }

    #[test]
    fn a2_graph() {
        let (g, e) = graph("A2");
        assert_eq!(e.vertex_count(), 3);
        assert_eq!(e.edge_count(), 1);
        let r1 = g.generator(1).unwrap();
        let r2 = g.generator(2).unwrap();
        assert!(is_adjacent(&g, &r1, &r2));
        assert_eq!(e.neighborhood(&g.longest_element()).unwrap(), vec![]);
        assert_eq!(e.neighborhood(&r1).unwrap(), vec![r2]);
    }

    #[test]
    fn a1xa1_graph() {
        let (g, e) = graph("A1xA1");
        assert_eq!(e.vertex_count(), 3);
        assert_eq!(e.edges(), vec![(0, 1)]);
        assert_eq!(e.w0(), Some(2));
        assert_eq!(g.reduced_word(e.vertices().element(2)), Word::new(vec![1, 2]));
    }

    #[test]
    fn w0_is_isolated() {
        let (g, e) = graph("B3");
        let w0 = g.longest_element();
        for x in e.vertices().elements() {
            if *x != w0 {
                assert!(!is_adjacent(&g, x, &w0));
            }
        }
    }

    #[test]
    fn a3_row() {
        let (_, e) = graph("A3");
        assert_eq!(e.valency_distribution().to_string(), "0^1.1^3.2^1.3^1.4^3");
        assert_eq!(e.pendant_indices().len(), 3);
    }

    #[test]
    fn dihedral_rows() {
        assert_eq!(graph("I2(7)").1.valency_distribution().to_string(), "0^1.1^2.2^2.3^2");
        assert_eq!(graph("I2(6)").1.valency_distribution().to_string(), "0^1.1^2.2^2.3^2");
        assert_eq!(graph("I2(5)").1.pendant_indices().len(), 2);
    }

    #[test]
    fn diameters() {
        let (_, e) = graph("A2");
        let (comps, d) = e.components_and_diameter().unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(d, 1);
        assert_eq!(graph("A3").1.components_and_diameter().unwrap().1, 3);
        assert_eq!(graph("B2").1.components_and_diameter().unwrap().1, 3);
        assert!(matches!(graph("A1").1.components_and_diameter(), Err(Error::DiameterUndefined(_))));
    }

    #[test]
    fn generator_degree() {
        let (g, e) = graph("A4");
        let v = e.vertex_count();
        for l in 1..=4 {
            let r = g.generator(l).unwrap();
            assert_eq!(e.neighborhood(&r).unwrap().len(), (v - 1) / 2);
        }
    }

    #[test]
    fn neighbourhood_of_non_vertex() {
        let (g, e) = graph("A2");
        let x = g.element_from_word(&Word::new(vec![1, 2])).unwrap();
        assert!(matches!(e.neighborhood(&x), Err(Error::NotAVertex(_))));
    }

    #[test]
    fn excess_against_pair_search() {
        let g = FiniteGroup::from_label("A3").unwrap();
        let inv = InvolutionSet::enumerate(&g);
        let mut with_id: Vec<Element> = vec![g.identity()];
        with_id.extend(inv.elements().iter().cloned());
        for w in g.elements() {
            let mut best = usize::MAX;
            for x in &with_id {
                for y in &with_id {
                    if g.mul(x, y) == w {
                        best = best.min(g.length(x) + g.length(y) - g.length(&w));
                    }
                }
            }
            assert_eq!(excess(&g, &inv, &w), best);
            assert_eq!(best % 2, 0);
        }
        assert_eq!(excess(&g, &inv, &g.identity()), 0);
    }

    #[test]
    fn parse_table_notation() {
        let d: ValencyDistribution = "$0^1.1^3.3^{13}.4^7$".parse().unwrap();
        assert_eq!(d.pairs(), vec![(0, 1), (1, 3), (3, 13), (4, 7)]);
        let glued: ValencyDistribution = "55^4.59^{10}115^6".parse().unwrap();
        assert_eq!(glued.pairs(), vec![(55, 4), (59, 10), (115, 6)]);
        let spaced: ValencyDistribution = "13^{22}.14^ {30}.15^{30}".parse().unwrap();
        assert_eq!(spaced.count(14), 30);
        let dots: ValencyDistribution = r"0^1\cdot 1^2\cdot 2^2".parse().unwrap();
        assert_eq!(dots.total(), 5);
        let bare: ValencyDistribution = "0^10.1^125".parse().unwrap();
        assert_eq!(bare.pairs(), vec![(0, 10), (1, 125)]);
        assert_eq!(bare.to_string().parse::<ValencyDistribution>().unwrap(), bare);
        assert!("3^".parse::<ValencyDistribution>().is_err());
        assert!("3^1.3^2".parse::<ValencyDistribution>().is_err());
    }
}
