//! Finite groups given by multiplication tables, gradings of an
//! alphabet by group elements, and the induced decomposition of a
//! degree-by-degree basis into group-homogeneous components.

use crate::algebra::{BasisTable, Presentation};
use crate::error::{Error, Result};
use crate::poly::NcPoly;
use crate::word::{Alphabet, Word};

/// Index of a group element inside its `FiniteGroup`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(pub usize);

/// Largest group order accepted; the constructor checks associativity
/// exhaustively, which is cubic in the order.
pub const MAX_GROUP_ORDER: usize = 64;

/// A finite group presented by its full multiplication table. The
/// table is validated exhaustively at construction: identity, unique
/// two-sided inverses, Latin-square rows and columns, associativity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    label: String,
}

impl FiniteGroup {
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::BadGroupTable("group must be nonempty".into()));
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::BadGroupTable(format!(
                "group order {n} exceeds the supported maximum {MAX_GROUP_ORDER}"
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::BadGroupTable("empty element name".into()));
            }
            if names[..i].contains(a) {
                return Err(Error::BadGroupTable(format!("duplicate element name '{a}'")));
            }
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::BadGroupTable(format!(
                "multiplication table must be {n} x {n}"
            )));
        }
        if table.iter().flatten().any(|&e| e >= n) {
            return Err(Error::BadGroupTable("table entry out of range".into()));
        }
        if identity >= n {
            return Err(Error::BadGroupTable("identity index out of range".into()));
        }
        #[allow(clippy::needless_range_loop)] // `a` indexes both orientations
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return Err(Error::BadGroupTable(format!(
                    "element {identity} is not a two-sided identity"
                )));
            }
        }
        // Latin square: every row and column is a permutation.
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                if row_seen[table[a][b]] {
                    return Err(Error::BadGroupTable(format!("row {a} repeats an entry")));
                }
                row_seen[table[a][b]] = true;
                if col_seen[table[b][a]] {
                    return Err(Error::BadGroupTable(format!("column {a} repeats an entry")));
                }
                col_seen[table[b][a]] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::BadGroupTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inverses = vec![0; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::BadGroupTable(format!("element {a} has no inverse")))?;
            inverses[a] = inv;
        }
        Ok(FiniteGroup {
            names,
            table,
            identity,
            inverses,
            label: label.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(self.identity)
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.table[a.0][b.0])
    }

    pub fn inverse(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inverses[a.0])
    }

    /// `a^k` for `k >= 0`.
    pub fn pow(&self, a: GroupElement, k: usize) -> GroupElement {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: GroupElement) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.identity() {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    pub fn name(&self, a: GroupElement) -> &str {
        &self.names[a.0]
    }

    pub fn element_by_name(&self, name: &str) -> Result<GroupElement> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(GroupElement)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order()).map(GroupElement)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Indices of the subgroup generated by the given elements, sorted.
    pub fn subgroup_generated(&self, gens: &[GroupElement]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(a) = frontier.pop() {
            for g in gens {
                let next = self.table[a][g.0];
                if !seen[next] {
                    seen[next] = true;
                    frontier.push(next);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }
}

/// Cyclic group of order `n` with elements `e, g, g^2, ...`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadGroupTable("cyclic group needs order >= 1".into()));
    }
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::new(names, table, 0, format!("cyclic({n})"))
}

/// Dihedral group of the given order `2n` (so `n >= 2` rotations),
/// elements `rho^i r^j` with `r rho = rho^{-1} r`. Names follow the
/// pattern `e, rho, rho^2, ..., r, rho r, rho^2 r, ...`.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(Error::BadGroupTable(
            "dihedral group needs even order >= 4".into(),
        ));
    }
    let n = order / 2;
    let idx = |i: usize, j: usize| i % n + n * (j % 2);
    let mut names = Vec::with_capacity(order);
    for j in 0..2 {
        for i in 0..n {
            let rot = match i {
                0 => String::new(),
                1 => "rho".to_string(),
                _ => format!("rho^{i}"),
            };
            names.push(match (rot.as_str(), j) {
                ("", 0) => "e".to_string(),
                ("", _) => "r".to_string(),
                (r0, 0) => r0.to_string(),
                (r0, _) => format!("{r0} r"),
            });
        }
    }
    let mut table = vec![vec![0; order]; order];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    // (rho^i r^j)(rho^k r^l): moving r past rho^k
                    // inverts the rotation.
                    let rot = if j == 0 { (i + k) % n } else { (i + n - k % n) % n };
                    table[idx(i, j)][idx(k, l)] = idx(rot, j + l);
                }
            }
        }
    }
    FiniteGroup::new(names, table, 0, format!("dihedral({order})"))
}

/// The quaternion group of order 8 with elements
/// `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion8() -> FiniteGroup {
    let names: Vec<String> = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // Encode element 2a+s as sign s applied to axis a (axes 1,i,j,k).
    let axis_mul = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, x) => (x, 0),
            (x, 0) => (x, 0),
            (1, 1) | (2, 2) | (3, 3) => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let mut table = vec![vec![0; 8]; 8];
    for a in 0..4 {
        for sa in 0..2 {
            for b in 0..4 {
                for sb in 0..2 {
                    let (c, sc) = axis_mul(a, b);
                    table[2 * a + sa][2 * b + sb] = 2 * c + (sa + sb + sc) % 2;
                }
            }
        }
    }
    FiniteGroup::new(names, table, 0, "quaternion8").expect("valid table")
}

/// Direct product with pairwise element names `(a,b)`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let n = g.order() * h.order();
    if n > MAX_GROUP_ORDER {
        return Err(Error::BadGroupTable(format!(
            "product order {n} exceeds the supported maximum {MAX_GROUP_ORDER}"
        )));
    }
    let idx = |a: usize, b: usize| a * h.order() + b;
    let mut names = Vec::with_capacity(n);
    for a in 0..g.order() {
        for b in 0..h.order() {
            names.push(format!(
                "({},{})",
                g.name(GroupElement(a)),
                h.name(GroupElement(b))
            ));
        }
    }
    let mut table = vec![vec![0; n]; n];
    for a1 in 0..g.order() {
        for b1 in 0..h.order() {
            for a2 in 0..g.order() {
                for b2 in 0..h.order() {
                    let ga = g.mul(GroupElement(a1), GroupElement(a2)).0;
                    let hb = h.mul(GroupElement(b1), GroupElement(b2)).0;
                    table[idx(a1, b1)][idx(a2, b2)] = idx(ga, hb);
                }
            }
        }
    }
    FiniteGroup::new(
        names,
        table,
        idx(g.identity().0, h.identity().0),
        format!("{} x {}", g.label(), h.label()),
    )
}

/// An assignment of a group element to every generator of an alphabet.
#[derive(Debug, Clone)]
pub struct Grading {
    group: FiniteGroup,
    assignment: Vec<GroupElement>,
}

impl Grading {
    /// Builds a grading from generator-name to element-name pairs;
    /// every generator must be assigned.
    pub fn new(
        group: FiniteGroup,
        alphabet: &Alphabet,
        assignment: &[(String, String)],
    ) -> Result<Self> {
        let mut by_letter: Vec<Option<GroupElement>> = vec![None; alphabet.len()];
        for (gen, elem) in assignment {
            let i = alphabet.index_of(gen)?;
            let e = group.element_by_name(elem)?;
            by_letter[i] = Some(e);
        }
        let mut letters = Vec::with_capacity(alphabet.len());
        for (i, slot) in by_letter.into_iter().enumerate() {
            match slot {
                Some(e) => letters.push(e),
                None => {
                    return Err(Error::InadmissibleGrading(format!(
                        "generator '{}' has no assigned group degree",
                        alphabet.symbol(i).name
                    )))
                }
            }
        }
        Ok(Grading {
            group,
            assignment: letters,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn letter_degree(&self, letter: usize) -> GroupElement {
        self.assignment[letter]
    }

    pub fn assignment(&self) -> &[GroupElement] {
        &self.assignment
    }
}

/// Group degree of a word: the left-to-right product of its letters'
/// assigned elements.
pub fn g_degree(grading: &Grading, w: &Word) -> GroupElement {
    let mut acc = grading.group().identity();
    for &l in w.letters() {
        acc = grading.group().mul(acc, grading.letter_degree(l as usize));
    }
    acc
}

/// The common group degree of all words of a polynomial: errors if two
/// words disagree, returns `None` for the zero polynomial.
pub fn g_homogeneous_degree(grading: &Grading, p: &NcPoly) -> Result<Option<GroupElement>> {
    let mut common: Option<GroupElement> = None;
    for (w, _) in p.terms() {
        let d = g_degree(grading, w);
        match common {
            None => common = Some(d),
            Some(c) if c != d => {
                return Err(Error::InadmissibleGrading(format!(
                    "words of group degrees '{}' and '{}' mixed in one polynomial",
                    grading.group().name(c),
                    grading.group().name(d)
                )))
            }
            _ => {}
        }
    }
    Ok(common)
}

/// Whether every defining relation is group-homogeneous, so the
/// grading descends to the quotient algebra.
pub fn is_admissible_grading(p: &Presentation, grading: &Grading) -> bool {
    p.relations()
        .iter()
        .all(|r| g_homogeneous_degree(grading, r).is_ok())
}

/// Whether the generator degrees generate the whole group. For a
/// group algebra coaction this is exactly inner-faithfulness.
pub fn is_inner_faithful(grading: &Grading) -> bool {
    grading
        .group()
        .subgroup_generated(grading.assignment())
        .len()
        == grading.group().order()
}

/// A basis split by group degree: `component(n, g)` lists the basis
/// words of degree `n` whose word degree is `g`.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    group_order: usize,
    identity: usize,
    rows: Vec<Vec<Vec<Word>>>,
}

impl GradedBasis {
    pub fn max_degree(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Basis words of the given total degree and group degree.
    pub fn component(&self, n: usize, g: GroupElement) -> &[Word] {
        self.rows
            .get(n)
            .map(|row| row[g.0].as_slice())
            .unwrap_or(&[])
    }

    /// The identity component (the fixed subring under the dual
    /// action), as a degree-by-degree table up to `n`.
    pub fn fixed_table(&self, n: usize) -> BasisTable {
        let rows = (0..=n)
            .map(|k| self.component(k, GroupElement(self.identity)).to_vec())
            .collect();
        BasisTable::new(rows)
    }

    /// Dimensions of all components at total degree `n`.
    pub fn component_dims(&self, n: usize) -> Vec<usize> {
        (0..self.group_order)
            .map(|g| self.component(n, GroupElement(g)).len())
            .collect()
    }
}

/// Splits each degree row of a basis by group degree. The component
/// rows of one degree always partition that degree's row, preserving
/// the row's word order.
pub fn graded_decompose(basis: &BasisTable, grading: &Grading) -> Result<GradedBasis> {
    let order = grading.group().order();
    let mut rows = Vec::with_capacity(basis.rows().len());
    for row in basis.rows() {
        let mut split: Vec<Vec<Word>> = vec![Vec::new(); order];
        for w in row {
            for &l in w.letters() {
                if l as usize >= grading.assignment().len() {
                    return Err(Error::LetterOutOfRange {
                        index: l as usize,
                        size: grading.assignment().len(),
                    });
                }
            }
            split[g_degree(grading, w).0].push(w.clone());
        }
        rows.push(split);
    }
    Ok(GradedBasis {
        group_order: order,
        identity: grading.group().identity().0,
        rows,
    })
}
