use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bitset::ElementSet;
use crate::error::{AxiomViolation, GroupError};
use crate::lattice::SubgroupLattice;
use crate::section::Section;
use crate::subgroup::Subgroup;

/// Element index; `0` is always the identity.
pub type Elem = usize;

pub const DEFAULT_MAX_ORDER: usize = 128;

/// A finite group given by its multiplication table.  Cloning is cheap.
#[derive(Clone)]
pub struct Group {
    inner: Arc<Inner>,
}

struct Inner {
    n: usize,
    table: Vec<Elem>,
    inv: Vec<Elem>,
    orders: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<Elem>>,
    name: Option<String>,
    lattice: OnceLock<SubgroupLattice>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.table == other.inner.table
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.name().unwrap_or("?"), self.order())
    }
}

impl Group {
    /// Validate the group axioms on a table. Does not check solvability.
    pub fn from_table(rows: Vec<Vec<Elem>>, name: Option<String>) -> Result<Group, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Parse { line: 1, message: "empty table".into() });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(AxiomViolation::RowLength { row: i, len: row.len() }));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::NotAGroup(AxiomViolation::OutOfRange { row: i, col: j, value: v }));
                }
            }
            table.extend_from_slice(row);
        }
        for i in 0..n {
            if table[i] != i || table[i * n] != i {
                return Err(GroupError::NotAGroup(AxiomViolation::Identity { element: i }));
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a * n + b] == 0 && table[b * n + a] == 0) {
                Some(b) => inv[a] = b,
                None => return Err(GroupError::NotAGroup(AxiomViolation::Inverse { element: a })),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(GroupError::NotAGroup(AxiomViolation::Associativity { a, b, c }));
                    }
                }
            }
        }
        Ok(Self::assemble(n, table, inv, name))
    }

    fn assemble(n: usize, table: Vec<Elem>, inv: Vec<Elem>, name: Option<String>) -> Group {
        let mut orders = vec![0; n];
        for (x, slot) in orders.iter_mut().enumerate() {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = table[y * n + x];
                k += 1;
            }
            *slot = k;
        }
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut class: Vec<Elem> = (0..n).map(|g| table[table[g * n + x] * n + inv[g]]).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                class_of[y] = classes.len();
            }
            classes.push(class);
        }
        Group {
            inner: Arc::new(Inner {
                n,
                table,
                inv,
                orders,
                class_of,
                classes,
                name,
                lattice: OnceLock::new(),
            }),
        }
    }

    /// Validate axioms, the order cap and solvability.
    pub fn checked(rows: Vec<Vec<Elem>>, name: Option<String>, max_order: usize) -> Result<Group, GroupError> {
        if rows.len() > max_order {
            return Err(GroupError::TooLarge { order: rows.len(), cap: max_order });
        }
        let g = Self::from_table(rows, name)?;
        if !g.is_solvable() {
            return Err(GroupError::NotSolvable(g.order()));
        }
        Ok(g)
    }

    /// Parse the plain-text group file format.
    pub fn parse(text: &str, max_order: usize) -> Result<Group, GroupError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(GroupError::Parse { line: 1, message: "missing order".into() })?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| GroupError::Parse { line: 1, message: format!("bad order `{}`", first.trim()) })?;
        if n > max_order {
            return Err(GroupError::TooLarge { order: n, cap: max_order });
        }
        let mut rows = Vec::with_capacity(n);
        let mut name = None;
        for (idx, line) in lines {
            let line = line.trim();
            if let Some(label) = line.strip_prefix("name") {
                if rows.len() == n {
                    name = Some(label.trim().to_string());
                    continue;
                }
            }
            if rows.len() == n {
                return Err(GroupError::Parse { line: idx + 1, message: "unexpected trailing content".into() });
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| GroupError::Parse { line: idx + 1, message: e.to_string() })?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(GroupError::Parse {
                line: rows.len() + 2,
                message: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        Self::checked(rows, name, max_order)
    }

    /// Render in the group file format.
    pub fn to_text(&self) -> String {
        let n = self.order();
        let mut out = format!("{n}\n");
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| self.mul(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if let Some(name) = self.name() {
            out.push_str(&format!("name {name}\n"));
        }
        out
    }

    pub fn with_name(&self, name: &str) -> Group {
        let i = &self.inner;
        Self::assemble(i.n, i.table.clone(), i.inv.clone(), Some(name.to_string()))
    }

    pub fn order(&self) -> usize {
        self.inner.n
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.inner.table[a * self.inner.n + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inner.inv[a]
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let ord = self.element_order(a) as i64;
        let k = k.rem_euclid(ord);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        self.inner.orders[a]
    }

    pub fn exponent(&self) -> usize {
        self.inner.orders.iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn classes(&self) -> &[Vec<Elem>] {
        &self.inner.classes
    }

    pub fn class_of(&self, x: Elem) -> usize {
        self.inner.class_of[x]
    }

    pub fn class_reps(&self) -> Vec<Elem> {
        self.classes().iter().map(|c| c[0]).collect()
    }

    pub fn centralizer_order(&self, x: Elem) -> usize {
        self.order() / self.classes()[self.class_of(x)].len()
    }

    pub fn is_abelian(&self) -> bool {
        self.classes().len() == self.order()
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        self.inner.lattice.get_or_init(|| SubgroupLattice::enumerate(self))
    }

    /// All subgroups ordered by (order, element list).
    pub fn subgroups(&self) -> &[Subgroup] {
        self.lattice().subgroups()
    }

    // ---- subgroup construction ----

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_set(ElementSet::from_elements(self.order(), self.elements()))
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_set(ElementSet::from_elements(self.order(), [0]))
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.order())
    }

    /// Validate that `elements` form a subgroup.
    pub fn subgroup(&self, elements: &[Elem]) -> Result<Subgroup, GroupError> {
        if elements.iter().any(|&x| x >= self.order()) {
            return Err(GroupError::NotASubgroup);
        }
        let set = ElementSet::from_elements(self.order(), elements.iter().copied());
        if !set.contains(0) {
            return Err(GroupError::NotASubgroup);
        }
        for a in set.iter() {
            if !set.contains(self.inv(a)) {
                return Err(GroupError::NotASubgroup);
            }
            for b in set.iter() {
                if !set.contains(self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(Subgroup::from_set(set))
    }

    /// The subgroup generated by `gens`.
    pub fn generated(&self, gens: &[Elem]) -> Subgroup {
        Subgroup::from_set(self.closure(gens))
    }

    /// Orbit of the identity under right multiplication by `gens`.
    fn closure(&self, gens: &[Elem]) -> ElementSet {
        let mut set = self.empty_set();
        set.insert(0);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators_of(&self, h: &Subgroup) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = self.trivial();
        for &x in h.elements() {
            if !span.contains(x) {
                gens.push(x);
                span = self.generated(&gens);
                if span.order() == h.order() {
                    break;
                }
            }
        }
        gens
    }

    /// ⟨a ∪ b⟩
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        let mut gens = self.generators_of(a);
        gens.extend(self.generators_of(b));
        self.generated(&gens)
    }

    /// ⟨h k h⁻¹ k⁻¹ : h ∈ H, k ∈ K⟩
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut set = self.empty_set();
        for &a in h.elements() {
            for &b in k.elements() {
                set.insert(self.commutator(a, b));
            }
        }
        let gens: Vec<Elem> = set.iter().collect();
        self.generated(&gens)
    }

    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        self.commutator_subgroup(h, h)
    }

    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let next = self.derived_subgroup(series.last().unwrap());
            if next.order() == series.last().unwrap().order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    pub fn subgroup_is_abelian(&self, h: &Subgroup) -> bool {
        let e = h.elements();
        e.iter().all(|&a| e.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `H^g = g⁻¹ H g`
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: Elem) -> Subgroup {
        let gi = self.inv(g);
        Subgroup::from_set(ElementSet::from_elements(
            self.order(),
            h.elements().iter().map(|&x| self.conj(gi, x)),
        ))
    }

    /// Whether `h ⊴ b` (requires `h ≤ b`).
    pub fn is_normal_in(&self, h: &Subgroup, b: &Subgroup) -> bool {
        h.is_subgroup_of(b)
            && self
                .generators_of(b)
                .iter()
                .all(|&g| h.elements().iter().all(|&x| h.contains(self.conj(g, x))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normal_in(h, &self.whole())
    }

    /// `{b ∈ B : b H b⁻¹ = H}`
    pub fn normalizer_in(&self, h: &Subgroup, b: &Subgroup) -> Subgroup {
        let elems = b
            .elements()
            .iter()
            .copied()
            .filter(|&g| h.elements().iter().all(|&x| h.contains(self.conj(g, x))));
        Subgroup::from_set(ElementSet::from_elements(self.order(), elems))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        self.normalizer_in(h, &self.whole())
    }

    /// Elements of `b` commuting with every element of `s`.
    pub fn centralizer_in(&self, s: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens = self.generators_of(s);
        let elems = b
            .elements()
            .iter()
            .copied()
            .filter(|&g| gens.iter().all(|&x| self.mul(g, x) == self.mul(x, g)));
        Subgroup::from_set(ElementSet::from_elements(self.order(), elems))
    }

    pub fn centralizer(&self, s: &Subgroup) -> Subgroup {
        self.centralizer_in(s, &self.whole())
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    /// `⋂_{b ∈ B} b H b⁻¹`
    pub fn core_in(&self, h: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut set = h.set().clone();
        for &g in b.elements() {
            set = set.intersection(self.conjugate_subgroup(h, g).set());
        }
        Subgroup::from_set(set)
    }

    pub fn core(&self, h: &Subgroup) -> Subgroup {
        self.core_in(h, &self.whole())
    }

    /// Normal subgroups of the whole group, in lattice order.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        self.subgroups().iter().filter(|h| self.is_normal(h)).cloned().collect()
    }

    /// Subgroups `X` with `lower ≤ X ≤ upper`, in lattice order.
    pub fn subgroups_between(&self, lower: &Subgroup, upper: &Subgroup) -> Vec<Subgroup> {
        self.subgroups()
            .iter()
            .filter(|x| lower.is_subgroup_of(x) && x.is_subgroup_of(upper))
            .cloned()
            .collect()
    }

    /// Maximal proper subgroups of `b`.
    pub fn maximal_subgroups_of(&self, b: &Subgroup) -> Vec<Subgroup> {
        let proper: Vec<&Subgroup> = self
            .subgroups()
            .iter()
            .filter(|x| x.is_subgroup_of(b) && x.order() < b.order())
            .collect();
        proper
            .iter()
            .filter(|x| !proper.iter().any(|y| y.order() > x.order() && x.is_subgroup_of(y)))
            .map(|x| (*x).clone())
            .collect()
    }

    /// Subgroups `X` normal in `ambient` with `lower < X ≤ ambient` and no
    /// subgroup normal in `ambient` strictly between `lower` and `X`.
    pub fn minimal_normal_over(&self, lower: &Subgroup, ambient: &Subgroup) -> Vec<Subgroup> {
        let cands: Vec<Subgroup> = self
            .subgroups_between(lower, ambient)
            .into_iter()
            .filter(|x| x.order() > lower.order() && self.is_normal_in(x, ambient))
            .collect();
        cands
            .iter()
            .filter(|x| !cands.iter().any(|y| y.order() < x.order() && y.is_subgroup_of(x)))
            .cloned()
            .collect()
    }

    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        self.minimal_normal_over(&self.trivial(), &self.whole())
    }

    /// Largest normal p-subgroup.
    pub fn p_core(&self, p: usize) -> Subgroup {
        let mut best = self.trivial();
        for h in self.normal_subgroups() {
            if is_power_of(h.order(), p) && h.order() > best.order() {
                best = h;
            }
        }
        best
    }

    /// Join of the largest normal p-subgroups over the primes dividing |G|.
    pub fn fitting_subgroup(&self) -> Subgroup {
        prime_factors(self.order())
            .into_iter()
            .fold(self.trivial(), |acc, p| self.join(&acc, &self.p_core(p)))
    }

    pub fn is_nilpotent_subgroup(&self, h: &Subgroup) -> bool {
        // A finite group is nilpotent iff each Sylow subgroup is normal, i.e.
        // iff it is the product of its normal p-cores.
        let emb = self.embed(h);
        let g = emb.group();
        g.fitting_subgroup().order() == g.order()
    }

    // ---- sections ----

    pub fn quotient(&self, n: &Subgroup) -> Result<Section, GroupError> {
        Section::new(self, &self.whole(), n)
    }

    /// The subgroup `h` as a standalone group (order-preserving relabelling).
    pub fn embed(&self, h: &Subgroup) -> Section {
        Section::new(self, h, &self.trivial()).expect("trivial subgroup is normal")
    }

    /// The section `top / bottom`.
    pub fn section(&self, top: &Subgroup, bottom: &Subgroup) -> Result<Section, GroupError> {
        Section::new(self, top, bottom)
    }

    /// Elements `g` such that `g⁻¹ H g = K`, i.e. `H^g = K`.
    pub fn conjugators(&self, h: &Subgroup, k: &Subgroup) -> Vec<Elem> {
        self.elements().filter(|&g| &self.conjugate_subgroup(h, g) == k).collect()
    }
}

pub(crate) fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
