//! Finite groups as exact stand-ins for local Weil groups.
//!
//! A [`FiniteGroup`] is a full multiplication table plus derived data:
//! inverses, element orders, conjugacy classes in a canonical order, a
//! generating set with reaching words, and (built lazily) the table of
//! irreducible characters over exact cyclotomic numbers.
//!
//! [`ClassFunction`] carries the character calculus: pointwise product
//! (tensor), complex conjugate (dual), Adams operations, symmetric and
//! exterior powers, inner products, induction and restriction along a
//! [`Subgroup`]. On top of that sit the structural queries the decision
//! layer needs: linear characters, self-twists, the dihedral /
//! tetrahedral / octahedral classification of 2-dimensional characters,
//! index-3 subgroups up to conjugacy, and prime-index Clifford checks.
//!
//! Text input format (`FiniteGroup::parse`):
//!
//! ```text
//! # comment
//! group <name>
//! order <n>
//! table
//! <n rows of n element indices, row g lists g*h for h = 0..n-1>
//! end
//! chartable            # optional; class order as printed by describe()
//! <name>: <cyclotomic literal> ... (one per class)
//! end
//! ```

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::OnceCell;

use crate::cyclotomic::{lcm, Cyclotomic};
use crate::error::{Error, Result};
use crate::report::RunReport;

pub mod catalog;

/// Finite group with canonical conjugacy-class data and a lazily built
/// irreducible character table.
pub struct FiniteGroup {
    name: String,
    n: usize,
    /// Flattened multiplication table: `mult[g * n + h] = g * h`.
    mult: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
    element_orders: Vec<u32>,
    exponent: u32,
    classes: Vec<Vec<u32>>,
    class_of: Vec<u32>,
    generators: Vec<u32>,
    /// Generator-index words reaching each element from the identity by
    /// right multiplication.
    words: Vec<Vec<u32>>,
    /// Character seeds coming from the construction model (matrix traces,
    /// permutation fixed points), one value per class.
    seeds: Vec<Vec<Cyclotomic>>,
    table: OnceCell<Vec<(String, Vec<Cyclotomic>)>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup({}, order {}, {} classes)",
            self.name,
            self.n,
            self.classes.len()
        )
    }
}

fn bfs_words(
    n: usize,
    mult: &[u32],
    identity: u32,
    gens: &[u32],
) -> (usize, Vec<Option<Vec<u32>>>) {
    let mut words: Vec<Option<Vec<u32>>> = vec![None; n];
    words[identity as usize] = Some(Vec::new());
    let mut queue = VecDeque::from([identity]);
    let mut reached = 1usize;
    while let Some(g) = queue.pop_front() {
        for (gi, &s) in gens.iter().enumerate() {
            let t = mult[g as usize * n + s as usize];
            if words[t as usize].is_none() {
                let mut w = words[g as usize].clone().unwrap();
                w.push(gi as u32);
                words[t as usize] = Some(w);
                reached += 1;
                queue.push_back(t);
            }
        }
    }
    (reached, words)
}

fn greedy_generators(n: usize, mult: &[u32], identity: u32) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    loop {
        let (reached, words) = bfs_words(n, mult, identity, &gens);
        if reached == n {
            return gens;
        }
        let missing = (0..n as u32).find(|&g| words[g as usize].is_none()).unwrap();
        gens.push(missing);
    }
}

impl FiniteGroup {
    /// Core constructor: derive everything from the table.
    fn finish(
        name: String,
        n: usize,
        mult: Vec<u32>,
        generators: Option<Vec<u32>>,
        validate: bool,
    ) -> Result<FiniteGroup> {
        if n == 0 || mult.len() != n * n {
            return Err(Error::GroupInput(format!(
                "table for `{name}` must be n*n with n >= 1"
            )));
        }
        if mult.iter().any(|&v| v as usize >= n) {
            return Err(Error::GroupInput(format!(
                "table for `{name}` has entries outside 0..{n}"
            )));
        }
        // Identity.
        let identity = (0..n as u32)
            .find(|&e| (0..n as u32).all(|h| mult[e as usize * n + h as usize] == h))
            .ok_or_else(|| Error::GroupInput(format!("table for `{name}` has no identity")))?;
        if validate {
            // Latin square rows/columns.
            for g in 0..n {
                let mut seen_r = vec![false; n];
                let mut seen_c = vec![false; n];
                for h in 0..n {
                    let r = mult[g * n + h] as usize;
                    let c = mult[h * n + g] as usize;
                    if seen_r[r] || seen_c[c] {
                        return Err(Error::GroupInput(format!(
                            "table for `{name}` is not cancellative at row/col {g}"
                        )));
                    }
                    seen_r[r] = true;
                    seen_c[c] = true;
                }
            }
            for a in 0..n {
                for b in 0..n {
                    let ab = mult[a * n + b] as usize;
                    for c in 0..n {
                        if mult[ab * n + c] != mult[a * n + mult[b * n + c] as usize] {
                            return Err(Error::GroupInput(format!(
                                "table for `{name}` is not associative at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        // Inverses.
        let mut inv = vec![0u32; n];
        for g in 0..n {
            let gi = (0..n as u32)
                .find(|&h| mult[g * n + h as usize] == identity)
                .ok_or_else(|| {
                    Error::GroupInput(format!("table for `{name}`: element {g} has no inverse"))
                })?;
            inv[g] = gi;
        }
        // Element orders and exponent.
        let mut element_orders = vec![0u32; n];
        let mut exponent = 1u64;
        for g in 0..n {
            let mut x = g as u32;
            let mut k = 1u32;
            while x != identity {
                x = mult[x as usize * n + g];
                k += 1;
            }
            element_orders[g] = k;
            exponent = lcm(exponent, k as u64);
        }
        let exponent = u32::try_from(exponent).expect("group exponent fits in u32");
        // Conjugacy classes.
        let mut class_of_raw = vec![usize::MAX; n];
        let mut raw_classes: Vec<Vec<u32>> = Vec::new();
        for g in 0..n as u32 {
            if class_of_raw[g as usize] != usize::MAX {
                continue;
            }
            let idx = raw_classes.len();
            let mut members = BTreeSet::new();
            for x in 0..n as u32 {
                let xg = mult[x as usize * n + g as usize];
                let conj = mult[xg as usize * n + inv[x as usize] as usize];
                members.insert(conj);
            }
            for &m in &members {
                class_of_raw[m as usize] = idx;
            }
            raw_classes.push(members.into_iter().collect());
        }
        // Canonical class order: element order, then size, then least member.
        let mut order_keys: Vec<usize> = (0..raw_classes.len()).collect();
        order_keys.sort_by_key(|&i| {
            let c = &raw_classes[i];
            (element_orders[c[0] as usize], c.len(), c[0])
        });
        let classes: Vec<Vec<u32>> = order_keys.iter().map(|&i| raw_classes[i].clone()).collect();
        let mut class_of = vec![0u32; n];
        for (ci, c) in classes.iter().enumerate() {
            for &g in c {
                class_of[g as usize] = ci as u32;
            }
        }
        // Generators and words.
        let generators = match generators {
            Some(g) => g,
            None => greedy_generators(n, &mult, identity),
        };
        let (reached, words) = bfs_words(n, &mult, identity, &generators);
        if reached != n {
            return Err(Error::GroupInput(format!(
                "declared generators of `{name}` only reach {reached} of {n} elements"
            )));
        }
        let words = words.into_iter().map(Option::unwrap).collect();
        Ok(FiniteGroup {
            name,
            n,
            mult,
            inv,
            identity,
            element_orders,
            exponent,
            classes,
            class_of,
            generators,
            words,
            seeds: Vec::new(),
            table: OnceCell::new(),
        })
    }

    /// Build from an explicit multiplication table (fully validated).
    pub fn from_mult_table(name: &str, n: usize, rows: Vec<Vec<u32>>) -> Result<Arc<FiniteGroup>> {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::GroupInput(format!(
                "`{name}`: expected {n} rows of {n} entries"
            )));
        }
        let mult: Vec<u32> = rows.into_iter().flatten().collect();
        Ok(Arc::new(Self::finish(name.to_string(), n, mult, None, true)?))
    }

    /// Build the closure of a set of permutations of `0..degree` under
    /// composition; seeds the character table with the permutation
    /// character (fixed-point counts).
    pub fn from_permutations(
        name: &str,
        degree: usize,
        gens: &[Vec<usize>],
    ) -> Result<Arc<FiniteGroup>> {
        if gens.is_empty() {
            return Err(Error::GroupInput(format!("`{name}`: no generators")));
        }
        for p in gens {
            let mut seen = vec![false; degree];
            if p.len() != degree || p.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::GroupInput(format!(
                    "`{name}`: generator {p:?} is not a permutation of 0..{degree}"
                )));
            }
        }
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> {
            (0..degree).map(|x| a[b[x]]).collect()
        };
        let id: Vec<usize> = (0..degree).collect();
        let mut elements = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, u32> = HashMap::from([(id, 0u32)]);
        let mut queue = VecDeque::from([0u32]);
        while let Some(g) = queue.pop_front() {
            for p in gens {
                let next = compose(&elements[g as usize], p);
                if !index.contains_key(&next) {
                    let idx = elements.len() as u32;
                    index.insert(next.clone(), idx);
                    elements.push(next);
                    queue.push_back(idx);
                }
            }
        }
        let n = elements.len();
        let mut mult = vec![0u32; n * n];
        for g in 0..n {
            for h in 0..n {
                mult[g * n + h] = index[&compose(&elements[g], &elements[h])];
            }
        }
        let gen_idx: Vec<u32> = gens.iter().map(|p| index[p]).collect();
        let mut group = Self::finish(name.to_string(), n, mult, Some(gen_idx), false)?;
        // Permutation character: fixed points per class representative.
        let perm_char: Vec<Cyclotomic> = group
            .classes
            .iter()
            .map(|c| {
                let rep = &elements[c[0] as usize];
                let fixed = (0..degree).filter(|&x| rep[x] == x).count();
                Cyclotomic::from_integer(1, fixed as i64)
            })
            .collect();
        group.seeds.push(perm_char);
        Ok(Arc::new(group))
    }

    /// Build the closure of square matrices over a fixed cyclotomic field
    /// under multiplication; seeds the character table with the trace of
    /// the defining matrices.
    pub fn from_matrices(
        name: &str,
        dim: usize,
        field_order: u32,
        gens: &[Vec<Cyclotomic>],
    ) -> Result<Arc<FiniteGroup>> {
        if gens.is_empty() || dim == 0 {
            return Err(Error::GroupInput(format!("`{name}`: no generators")));
        }
        let promote_all = |m: &[Cyclotomic]| -> Result<Vec<Cyclotomic>> {
            m.iter().map(|e| e.promote(field_order)).collect()
        };
        let key = |m: &[Cyclotomic]| -> String {
            m.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(";")
        };
        let matmul = |a: &[Cyclotomic], b: &[Cyclotomic]| -> Vec<Cyclotomic> {
            let mut out = vec![Cyclotomic::zero(field_order); dim * dim];
            for i in 0..dim {
                for k in 0..dim {
                    if a[i * dim + k].is_zero() {
                        continue;
                    }
                    for j in 0..dim {
                        let term = a[i * dim + k].mul(&b[k * dim + j]);
                        out[i * dim + j] = out[i * dim + j].add(&term);
                    }
                }
            }
            out.into_iter()
                .map(|e| e.promote(field_order).expect("closed field"))
                .collect()
        };
        let mut gen_mats = Vec::new();
        for g in gens {
            if g.len() != dim * dim {
                return Err(Error::GroupInput(format!(
                    "`{name}`: generator matrix must have {dim}x{dim} entries"
                )));
            }
            gen_mats.push(promote_all(g)?);
        }
        let mut id = vec![Cyclotomic::zero(1); dim * dim];
        for i in 0..dim {
            id[i * dim + i] = Cyclotomic::one(1);
        }
        let id = promote_all(&id)?;
        let mut elements = vec![id.clone()];
        let mut index: HashMap<String, u32> = HashMap::from([(key(&id), 0u32)]);
        let mut queue = VecDeque::from([0u32]);
        while let Some(g) = queue.pop_front() {
            for m in &gen_mats {
                let next = matmul(&elements[g as usize], m);
                let k = key(&next);
                if !index.contains_key(&k) {
                    let idx = elements.len() as u32;
                    index.insert(k, idx);
                    elements.push(next);
                    queue.push_back(idx);
                }
                if elements.len() > 20_000 {
                    return Err(Error::GroupInput(format!(
                        "`{name}`: matrix closure exceeds 20000 elements; not finite?"
                    )));
                }
            }
        }
        let n = elements.len();
        let mut mult = vec![0u32; n * n];
        for g in 0..n {
            for h in 0..n {
                mult[g * n + h] = index[&key(&matmul(&elements[g], &elements[h]))];
            }
        }
        let gen_idx: Vec<u32> = gen_mats.iter().map(|m| index[&key(m)]).collect();
        let mut group = Self::finish(name.to_string(), n, mult, Some(gen_idx), false)?;
        let trace_char: Vec<Cyclotomic> = group
            .classes
            .iter()
            .map(|c| {
                let m = &elements[c[0] as usize];
                (0..dim).fold(Cyclotomic::zero(field_order), |acc, i| acc.add(&m[i * dim + i]))
            })
            .collect();
        group.seeds.push(trace_char);
        Ok(Arc::new(group))
    }

    /// Direct product; the character table is the tensor product of the
    /// factor tables.
    pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Result<Arc<FiniteGroup>> {
        let na = a.n;
        let nb = b.n;
        let n = na * nb;
        let mut mult = vec![0u32; n * n];
        for ga in 0..na {
            for gb in 0..nb {
                let g = ga * nb + gb;
                for ha in 0..na {
                    for hb in 0..nb {
                        let h = ha * nb + hb;
                        let pa = a.mult[ga * na + ha] as usize;
                        let pb = b.mult[gb * nb + hb] as usize;
                        mult[g * n + h] = (pa * nb + pb) as u32;
                    }
                }
            }
        }
        let mut gens = Vec::new();
        for &g in &a.generators {
            gens.push(g as usize * nb + b.identity as usize);
        }
        for &g in &b.generators {
            gens.push(a.identity as usize * nb + g as usize);
        }
        let gens: Vec<u32> = gens.into_iter().map(|g| g as u32).collect();
        let name = format!("{}x{}", a.name, b.name);
        let group = Arc::new(Self::finish(name.clone(), n, mult, Some(gens), false)?);
        // Tensor the factor tables if both are available.
        if let (Ok(ta), Ok(tb)) = (a.irreducibles(), b.irreducibles()) {
            let mut entries = Vec::new();
            for fa in &ta {
                for fb in &tb {
                    let values: Vec<Cyclotomic> = group
                        .classes
                        .iter()
                        .map(|c| {
                            let rep = c[0] as usize;
                            let (ra, rb) = (rep / nb, rep % nb);
                            fa.value_at_class(a.class_of[ra] as usize)
                                .mul(&fb.value_at_class(b.class_of[rb] as usize))
                        })
                        .collect();
                    entries.push(values);
                }
            }
            let table = canonical_table(&group, entries);
            let _ = group.table.set(table);
        }
        Ok(group)
    }

    /// Parse the text format described at the module level.
    pub fn parse(input: &str) -> Result<Arc<FiniteGroup>> {
        let mut name = None;
        let mut order = None;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut chartable: Vec<(String, Vec<String>)> = Vec::new();
        let mut mode = "top";
        for (lineno, raw) in input.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            let err = |detail: String| Error::ParseAt {
                what: "group file",
                line: lineno + 1,
                detail,
            };
            if line.is_empty() {
                continue;
            }
            match mode {
                "top" => {
                    if let Some(rest) = line.strip_prefix("group") {
                        name = Some(rest.trim().to_string());
                    } else if let Some(rest) = line.strip_prefix("order") {
                        order = Some(rest.trim().parse::<usize>().map_err(|e| {
                            err(format!("bad order: {e}"))
                        })?);
                    } else if line == "table" {
                        mode = "table";
                    } else if line == "chartable" {
                        mode = "chartable";
                    } else {
                        return Err(err(format!("unexpected line `{line}`")));
                    }
                }
                "table" => {
                    if line == "end" {
                        mode = "top";
                    } else {
                        let row = line
                            .split_whitespace()
                            .map(|t| t.parse::<u32>().map_err(|e| err(format!("bad index: {e}"))))
                            .collect::<Result<Vec<_>>>()?;
                        rows.push(row);
                    }
                }
                "chartable" => {
                    if line == "end" {
                        mode = "top";
                    } else {
                        let (nm, rest) = line
                            .split_once(':')
                            .ok_or_else(|| err("expected `name: values`".into()))?;
                        chartable.push((
                            nm.trim().to_string(),
                            rest.split_whitespace().map(str::to_string).collect(),
                        ));
                    }
                }
                _ => unreachable!(),
            }
        }
        let name = name.ok_or_else(|| Error::GroupInput("missing `group <name>`".into()))?;
        let order = order.ok_or_else(|| Error::GroupInput("missing `order <n>`".into()))?;
        let group = Self::from_mult_table(&name, order, rows)?;
        if !chartable.is_empty() {
            let mut entries = Vec::new();
            let mut names = Vec::new();
            for (nm, vals) in chartable {
                if vals.len() != group.num_classes() {
                    return Err(Error::GroupInput(format!(
                        "character `{nm}` has {} values, group has {} classes",
                        vals.len(),
                        group.num_classes()
                    )));
                }
                let values = vals
                    .iter()
                    .map(|v| Cyclotomic::parse(v))
                    .collect::<Result<Vec<_>>>()?;
                names.push(nm);
                entries.push(values);
            }
            group.set_irreducibles(names, entries)?;
        }
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn class_of(&self, g: u32) -> usize {
        self.class_of[g as usize] as usize
    }

    pub fn class_rep(&self, c: usize) -> u32 {
        self.classes[c][0]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn element_order(&self, g: u32) -> u32 {
        self.element_orders[g as usize]
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn mul(&self, g: u32, h: u32) -> u32 {
        self.mult[g as usize * self.n + h as usize]
    }

    pub fn inv_of(&self, g: u32) -> u32 {
        self.inv[g as usize]
    }

    pub fn power(&self, g: u32, k: i64) -> u32 {
        let (mut base, mut k) = if k < 0 {
            (self.inv_of(g), (-k) as u64)
        } else {
            (g, k as u64)
        };
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(x, g), self.inv_of(x))
    }

    fn word_of(&self, g: u32) -> &[u32] {
        &self.words[g as usize]
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup(self: &Arc<Self>, gen_elems: &[u32]) -> Result<Subgroup> {
        let mut members = BTreeSet::from([self.identity]);
        let mut queue: VecDeque<u32> = VecDeque::from([self.identity]);
        while let Some(g) = queue.pop_front() {
            for &s in gen_elems {
                for t in [self.mul(g, s), self.mul(g, self.inv_of(s))] {
                    if members.insert(t) {
                        queue.push_back(t);
                    }
                }
            }
        }
        Subgroup::from_member_set(self, members)
    }

    /// Subgroup from an explicit element set (validated for closure).
    pub fn subgroup_from_elements(self: &Arc<Self>, elems: &BTreeSet<u32>) -> Result<Subgroup> {
        for &a in elems {
            if a as usize >= self.n {
                return Err(Error::GroupInput(format!("element {a} out of range")));
            }
            for &b in elems {
                if !elems.contains(&self.mul(a, b)) {
                    return Err(Error::GroupInput(
                        "element set is not closed under multiplication".into(),
                    ));
                }
            }
        }
        if !elems.contains(&self.identity) {
            return Err(Error::GroupInput("element set misses the identity".into()));
        }
        Subgroup::from_member_set(self, elems.clone())
    }

    /// Distinct cyclic subgroups, one per generated set.
    pub fn cyclic_subgroups(self: &Arc<Self>) -> Vec<Subgroup> {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut out = Vec::new();
        for g in 0..self.n as u32 {
            let sub = self.subgroup(&[g]).expect("cyclic closure");
            let key = sub.elements().to_vec();
            if seen.insert(key) {
                out.push(sub);
            }
        }
        out
    }

    /// Commutator subgroup element set.
    fn commutator_elements(&self) -> BTreeSet<u32> {
        let mut members = BTreeSet::from([self.identity]);
        let mut frontier: Vec<u32> = Vec::new();
        for g in 0..self.n as u32 {
            for h in 0..self.n as u32 {
                let c = self.mul(
                    self.mul(self.inv_of(g), self.inv_of(h)),
                    self.mul(g, h),
                );
                if members.insert(c) {
                    frontier.push(c);
                }
            }
        }
        // Close under multiplication.
        while let Some(g) = frontier.pop() {
            let snapshot: Vec<u32> = members.iter().copied().collect();
            for h in snapshot {
                for t in [self.mul(g, h), self.mul(h, g)] {
                    if members.insert(t) {
                        frontier.push(t);
                    }
                }
            }
        }
        members
    }

    /// Quotient by a normal element set, with the projection map.
    fn quotient_group(
        self: &Arc<Self>,
        normal: &BTreeSet<u32>,
    ) -> Result<(Arc<FiniteGroup>, Vec<u32>)> {
        for &x in normal.iter() {
            for g in 0..self.n as u32 {
                if !normal.contains(&self.conjugate(g, x)) {
                    return Err(Error::GroupInput(
                        "quotient requested by a non-normal subgroup".into(),
                    ));
                }
            }
        }
        let mut coset_of = vec![u32::MAX; self.n];
        let mut reps: Vec<u32> = Vec::new();
        for g in 0..self.n as u32 {
            if coset_of[g as usize] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            for &h in normal.iter() {
                coset_of[self.mul(g, h) as usize] = idx;
            }
            reps.push(g);
        }
        let q = reps.len();
        let mut mult = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                mult[a * q + b] = coset_of[self.mul(reps[a], reps[b]) as usize];
            }
        }
        let group = Arc::new(FiniteGroup::finish(
            format!("{}/N", self.name),
            q,
            mult,
            None,
            false,
        )?);
        Ok((group, coset_of))
    }

    /// All linear (degree-1) characters, trivial first, canonically
    /// ordered and named `1, eta1, eta2, ...`.
    pub fn linear_characters(self: &Arc<Self>) -> Result<Vec<ClassFunction>> {
        let commutators = self.commutator_elements();
        let (q, proj) = self.quotient_group(&commutators)?;
        // Enumerate homomorphisms from the abelian quotient to roots of
        // unity: assign each greedy generator a root of its order, extend
        // along words, keep consistent assignments.
        let gens = q.generators.clone();
        let orders: Vec<u32> = gens.iter().map(|&g| q.element_orders[g as usize]).collect();
        let mut assignment = vec![0u32; gens.len()];
        let mut found: BTreeMap<String, Vec<Cyclotomic>> = BTreeMap::new();
        loop {
            // Build values over q via words.
            let gen_vals: Vec<Cyclotomic> = assignment
                .iter()
                .zip(&orders)
                .map(|(&a, &d)| Cyclotomic::root(d, a as i64))
                .collect();
            let vals: Vec<Cyclotomic> = (0..q.n)
                .map(|g| {
                    q.word_of(g as u32)
                        .iter()
                        .fold(Cyclotomic::one(1), |acc, &gi| acc.mul(&gen_vals[gi as usize]))
                })
                .collect();
            let consistent = (0..q.n as u32).all(|g| {
                gens.iter().enumerate().all(|(gi, &s)| {
                    vals[q.mul(g, s) as usize] == vals[g as usize].mul(&gen_vals[gi])
                })
            });
            if consistent {
                let key = vals.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("|");
                found.entry(key).or_insert(vals);
            }
            // Increment the mixed-radix counter.
            let mut i = 0;
            loop {
                if i == gens.len() {
                    break;
                }
                assignment[i] += 1;
                if assignment[i] < orders[i] {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
            if i == gens.len() {
                break;
            }
            if gens.is_empty() {
                break;
            }
        }
        if found.len() != q.n {
            return Err(Error::GroupInput(format!(
                "linear character enumeration found {} of {} expected",
                found.len(),
                q.n
            )));
        }
        // Lift to class functions on self.
        let mut lifted: Vec<Vec<Cyclotomic>> = found
            .into_values()
            .map(|vals| {
                self.classes
                    .iter()
                    .map(|c| vals[proj[c[0] as usize] as usize].clone())
                    .collect()
            })
            .collect();
        // Trivial first, then canonical.
        lifted.sort_by_key(|v| (v.iter().any(|x| !x.is_one()), values_key(v, self.exponent)));
        Ok(lifted
            .into_iter()
            .enumerate()
            .map(|(i, values)| {
                let name = if i == 0 { "1".to_string() } else { format!("eta{i}") };
                ClassFunction::new_unchecked(self, name, values)
            })
            .collect())
    }

    /// Attach a user-supplied irreducible character table after checking
    /// row orthogonality and completeness.
    pub fn set_irreducibles(
        self: &Arc<Self>,
        names: Vec<String>,
        values: Vec<Vec<Cyclotomic>>,
    ) -> Result<()> {
        let fns: Vec<ClassFunction> = names
            .iter()
            .zip(values.iter())
            .map(|(n, v)| ClassFunction::new_unchecked(self, n.clone(), v.clone()))
            .collect();
        validate_orthogonality(self, &fns)?;
        let table: Vec<(String, Vec<Cyclotomic>)> = names.into_iter().zip(values).collect();
        self.table
            .set(table)
            .map_err(|_| Error::GroupInput("character table already attached".into()))?;
        Ok(())
    }

    /// The irreducible characters, building the table on first use.
    pub fn irreducibles(self: &Arc<Self>) -> Result<Vec<ClassFunction>> {
        if self.table.get().is_none() {
            let built = build_irreducibles(self)?;
            let _ = self.table.set(built);
        }
        Ok(self
            .table
            .get()
            .unwrap()
            .iter()
            .map(|(name, values)| ClassFunction::new_unchecked(self, name.clone(), values.clone()))
            .collect())
    }

    /// Conjugacy classes of index-3 subgroups, via actions on three
    /// points; the flag says whether the class member is normal.
    pub fn index3_subgroup_classes(self: &Arc<Self>) -> Result<Vec<(Subgroup, bool)>> {
        const S3: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let compose = |a: [usize; 3], b: [usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
        let k = self.generators.len();
        if 6usize.pow(k as u32) > 1_000_000 {
            return Err(Error::Unavailable(format!(
                "too many generators ({k}) for index-3 subgroup enumeration"
            )));
        }
        let mut subgroup_sets: Vec<BTreeSet<u32>> = Vec::new();
        let mut seen_sets: HashSet<Vec<u32>> = HashSet::new();
        let mut assignment = vec![0usize; k];
        loop {
            let images: Vec<[usize; 3]> = assignment.iter().map(|&a| S3[a]).collect();
            let f: Vec<[usize; 3]> = (0..self.n)
                .map(|g| {
                    self.word_of(g as u32)
                        .iter()
                        .fold([0, 1, 2], |acc, &gi| compose(acc, images[gi as usize]))
                })
                .collect();
            let consistent = (0..self.n as u32).all(|g| {
                self.generators.iter().enumerate().all(|(gi, &s)| {
                    f[self.mul(g, s) as usize] == compose(f[g as usize], images[gi])
                })
            });
            if consistent {
                // Transitive on {0,1,2}: the orbit of 0 must be everything.
                let orbit: BTreeSet<usize> = f.iter().map(|p| p[0]).collect();
                if orbit.len() == 3 {
                    let h: BTreeSet<u32> =
                        (0..self.n as u32).filter(|&g| f[g as usize][0] == 0).collect();
                    let key: Vec<u32> = h.iter().copied().collect();
                    if seen_sets.insert(key) {
                        subgroup_sets.push(h);
                    }
                }
            }
            let mut i = 0;
            loop {
                if i == k {
                    break;
                }
                assignment[i] += 1;
                if assignment[i] < 6 {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
            if i == k || k == 0 {
                break;
            }
        }
        // Dedupe up to conjugacy.
        let mut reps: Vec<BTreeSet<u32>> = Vec::new();
        for h in subgroup_sets {
            let mut is_new = true;
            'search: for x in 0..self.n as u32 {
                let conj: BTreeSet<u32> = h.iter().map(|&g| self.conjugate(x, g)).collect();
                if reps.contains(&conj) {
                    is_new = false;
                    break 'search;
                }
            }
            if is_new {
                reps.push(h);
            }
        }
        reps.into_iter()
            .map(|set| {
                let sub = self.subgroup_from_elements(&set)?;
                let normal = sub.is_normal();
                Ok((sub, normal))
            })
            .collect()
    }

    /// Normal subgroups of prime index `p`: kernels of order-`p` linear
    /// characters, one subgroup per distinct kernel.
    pub fn normal_subgroups_of_prime_index(self: &Arc<Self>, p: u32) -> Result<Vec<Subgroup>> {
        let mut out = Vec::new();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for eta in self.linear_characters()? {
            if eta.multiplicative_order()? != p as u64 {
                continue;
            }
            let kernel: BTreeSet<u32> = (0..self.n as u32)
                .filter(|&g| eta.at_element(g).is_one())
                .collect();
            let key: Vec<u32> = kernel.iter().copied().collect();
            if seen.insert(key) {
                out.push(self.subgroup_from_elements(&kernel)?);
            }
        }
        Ok(out)
    }

    /// Human-readable summary: classes, character table, classifications.
    pub fn describe(self: &Arc<Self>) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "group {} | order {} | exponent {} | {} classes",
            self.name,
            self.n,
            self.exponent,
            self.classes.len()
        );
        let _ = writeln!(s, "classes (index: size, element order, representative):");
        for (i, c) in self.classes.iter().enumerate() {
            let _ = writeln!(
                s,
                "  {i}: size {}, order {}, rep {}",
                c.len(),
                self.element_orders[c[0] as usize],
                c[0]
            );
        }
        match self.irreducibles() {
            Ok(table) => {
                let _ = writeln!(s, "irreducible characters:");
                for f in &table {
                    let vals: Vec<String> =
                        f.values().iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(s, "  {}: {}", f.name(), vals.join(" "));
                }
                for f in &table {
                    if f.degree_int() == Some(2) {
                        if let Ok(class) = classify_2dim(f) {
                            let _ = writeln!(s, "  {} is {}", f.name(), class);
                        }
                    }
                }
            }
            Err(e) => {
                let _ = writeln!(s, "irreducible characters: unavailable ({e})");
            }
        }
        if let Ok(idx3) = self.index3_subgroup_classes() {
            let _ = writeln!(
                s,
                "index-3 subgroup classes: {}",
                idx3.iter()
                    .map(|(h, nrm)| format!(
                        "order {}{}",
                        h.group().order(),
                        if *nrm { " (normal)" } else { "" }
                    ))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
        }
        s
    }
}

/// A subgroup carried both as an element subset of the parent and as a
/// standalone group (for its own character theory).
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<u32>,
    group: Arc<FiniteGroup>,
    pos_of: HashMap<u32, u32>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {})",
            self.elements.len(),
            self.parent.name
        )
    }
}

impl Subgroup {
    fn from_member_set(parent: &Arc<FiniteGroup>, members: BTreeSet<u32>) -> Result<Subgroup> {
        // Identity first, then ascending.
        let mut elements: Vec<u32> = Vec::with_capacity(members.len());
        elements.push(parent.identity);
        elements.extend(members.iter().copied().filter(|&g| g != parent.identity));
        let pos_of: HashMap<u32, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, &g)| (g, i as u32))
            .collect();
        let m = elements.len();
        let mut mult = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                mult[i * m + j] = pos_of[&parent.mul(elements[i], elements[j])];
            }
        }
        let mut group = FiniteGroup::finish(
            format!("{}-sub{}", parent.name, m),
            m,
            mult,
            None,
            false,
        )?;
        // Seed the subgroup's character-table closure with restrictions of
        // the parent's irreducibles when those are already known: every
        // irreducible downstairs occurs in such a restriction, which keeps
        // the closure complete even for non-monomial subgroups.
        if let Some(parent_table) = parent.table.get() {
            for (_, values) in parent_table {
                let restricted: Vec<Cyclotomic> = group
                    .classes
                    .iter()
                    .map(|c| {
                        let parent_elem = elements[c[0] as usize];
                        values[parent.class_of(parent_elem)].clone()
                    })
                    .collect();
                group.seeds.push(restricted);
            }
        }
        let group = Arc::new(group);
        Ok(Subgroup {
            parent: parent.clone(),
            elements,
            group,
            pos_of,
        })
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// Element indices in the parent, identity first.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// The subgroup as a standalone group; element `i` corresponds to
    /// `self.elements()[i]` in the parent.
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.elements.len()
    }

    pub fn contains(&self, g: u32) -> bool {
        self.pos_of.contains_key(&g)
    }

    pub fn is_normal(&self) -> bool {
        self.parent.generators.iter().all(|&x| {
            self.elements
                .iter()
                .all(|&h| self.contains(self.parent.conjugate(x, h)))
        })
    }

    /// The conjugate subgroup x H x^-1 as an element set.
    pub fn conjugated_elements(&self, x: u32) -> BTreeSet<u32> {
        self.elements
            .iter()
            .map(|&g| self.parent.conjugate(x, g))
            .collect()
    }

    pub fn is_conjugate_to(&self, other: &Subgroup) -> bool {
        if self.elements.len() != other.elements.len() {
            return false;
        }
        let target: BTreeSet<u32> = other.elements.iter().copied().collect();
        (0..self.parent.order() as u32).any(|x| self.conjugated_elements(x) == target)
    }

    /// Induce a class function on the subgroup up to the parent.
    pub fn induce(&self, f: &ClassFunction) -> Result<ClassFunction> {
        if !Arc::ptr_eq(f.group(), &self.group) {
            return Err(Error::GroupInput(
                "inducing a class function that lives on a different group".into(),
            ));
        }
        let parent = &self.parent;
        let size = BigRational::from_integer(BigInt::from(self.elements.len()));
        let values: Vec<Cyclotomic> = parent
            .classes
            .iter()
            .map(|c| {
                let g = c[0];
                let mut acc = Cyclotomic::zero(1);
                for x in 0..parent.order() as u32 {
                    let y = parent.mul(parent.mul(parent.inv_of(x), g), x);
                    if let Some(&pos) = self.pos_of.get(&y) {
                        acc = acc.add(&f.at_element(pos));
                    }
                }
                acc.div_rational(&size)
            })
            .collect();
        Ok(ClassFunction::new_unchecked(
            parent,
            format!("Ind({})", f.name()),
            values,
        ))
    }

    /// Restrict a class function on the parent to the subgroup.
    pub fn restrict(&self, f: &ClassFunction) -> Result<ClassFunction> {
        if !Arc::ptr_eq(f.group(), &self.parent) {
            return Err(Error::GroupInput(
                "restricting a class function that lives on a different group".into(),
            ));
        }
        let values: Vec<Cyclotomic> = self
            .group
            .classes
            .iter()
            .map(|c| {
                let parent_elem = self.elements[c[0] as usize];
                f.value_at_class(self.parent.class_of(parent_elem))
            })
            .collect();
        Ok(ClassFunction::new_unchecked(
            &self.group,
            format!("Res({})", f.name()),
            values,
        ))
    }

    /// Conjugate of a class function on the subgroup by a parent element:
    /// value at h is f(x h x^-1), defined when x normalizes the subgroup.
    pub fn conjugate_class_function(&self, f: &ClassFunction, x: u32) -> Result<ClassFunction> {
        if !Arc::ptr_eq(f.group(), &self.group) {
            return Err(Error::GroupInput(
                "conjugating a class function from a different group".into(),
            ));
        }
        let values: Vec<Cyclotomic> = self
            .group
            .classes
            .iter()
            .map(|c| {
                let parent_elem = self.elements[c[0] as usize];
                let conj = self.parent.conjugate(x, parent_elem);
                match self.pos_of.get(&conj) {
                    Some(&pos) => Ok(f.at_element(pos)),
                    None => Err(Error::GroupInput(
                        "element does not normalize the subgroup".into(),
                    )),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction::new_unchecked(
            &self.group,
            format!("{}^x", f.name()),
            values,
        ))
    }
}

/// An exact class function: one cyclotomic value per conjugacy class.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    name: String,
    values: Vec<Cyclotomic>,
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassFunction({} on {})", self.name, self.group.name)
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

fn values_key(values: &[Cyclotomic], exponent: u32) -> String {
    // Storage orders can exceed the group exponent (restrictions keep the
    // parent field), so lift everything to a common multiple. The key is
    // deterministic for a fixed computation path, which is all sorting
    // and dedup need; genuine equality tests go through PartialEq.
    let m = values.iter().fold(exponent as u64, |acc, v| {
        lcm(acc, v.order() as u64)
    });
    let m = u32::try_from(m).expect("key field order fits in u32");
    values
        .iter()
        .map(|v| v.promote(m).expect("order divides the common multiple").to_string())
        .collect::<Vec<_>>()
        .join("|")
}

impl ClassFunction {
    fn new_unchecked(group: &Arc<FiniteGroup>, name: String, values: Vec<Cyclotomic>) -> Self {
        debug_assert_eq!(values.len(), group.num_classes());
        ClassFunction {
            group: group.clone(),
            name,
            values,
        }
    }

    pub fn new(group: &Arc<FiniteGroup>, name: &str, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::GroupInput(format!(
                "class function needs {} values, got {}",
                group.num_classes(),
                values.len()
            )));
        }
        Ok(Self::new_unchecked(group, name.to_string(), values))
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Self::new_unchecked(
            group,
            "1".to_string(),
            vec![Cyclotomic::one(1); group.num_classes()],
        )
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        Self::new_unchecked(
            group,
            "0".to_string(),
            vec![Cyclotomic::zero(1); group.num_classes()],
        )
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at_class(&self, c: usize) -> Cyclotomic {
        self.values[c].clone()
    }

    pub fn at_element(&self, g: u32) -> Cyclotomic {
        self.values[self.group.class_of(g)].clone()
    }

    pub fn degree(&self) -> Cyclotomic {
        self.values[0].clone()
    }

    pub fn degree_int(&self) -> Option<i64> {
        self.values[0]
            .as_integer()
            .and_then(|b| i64::try_from(b).ok())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Self {
        debug_assert!(Arc::ptr_eq(&self.group, &other.group));
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| op(a, b))
            .collect();
        Self::new_unchecked(&self.group, String::new(), values)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.add(b))
            .with_name(format!("{}+{}", self.name, other.name))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.sub(b))
            .with_name(format!("{}-{}", self.name, other.name))
    }

    /// Pointwise product: the character of the tensor product.
    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.mul(b))
            .with_name(format!("{}*{}", self.name, other.name))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let values = self.values.iter().map(|v| v.scale(c)).collect();
        Self::new_unchecked(&self.group, self.name.clone(), values)
    }

    pub fn neg(&self) -> Self {
        let values = self.values.iter().map(|v| v.neg()).collect();
        Self::new_unchecked(&self.group, format!("-{}", self.name), values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    /// Complex conjugate; for a character this is the dual.
    pub fn conj_char(&self) -> Self {
        let values = self.values.iter().map(Cyclotomic::conj).collect();
        Self::new_unchecked(&self.group, format!("~{}", self.name), values)
    }

    /// Adams operation: value at g becomes the value at g^k.
    pub fn adams(&self, k: i64) -> Self {
        let values = self
            .group
            .classes
            .iter()
            .map(|c| {
                let g = self.group.power(c[0], k);
                self.values[self.group.class_of(g)].clone()
            })
            .collect();
        Self::new_unchecked(&self.group, format!("psi{k}({})", self.name), values)
    }

    /// Symmetric power via the Newton recurrence
    /// k * h_k = sum_{i=1..k} psi_i * h_{k-i}.
    pub fn sym_pow(&self, k: u32) -> Self {
        let mut h: Vec<ClassFunction> = vec![Self::trivial(&self.group)];
        for j in 1..=k {
            let mut acc = Self::zero(&self.group);
            for i in 1..=j {
                acc = acc.add(&self.adams(i as i64).mul(&h[(j - i) as usize]));
            }
            let inv_j = BigRational::new(BigInt::one(), BigInt::from(j));
            h.push(acc.scale(&inv_j));
        }
        h.pop().unwrap().with_name(format!("sym{k}({})", self.name))
    }

    /// Exterior power via
    /// k * e_k = sum_{i=1..k} (-1)^(i-1) psi_i * e_{k-i}.
    pub fn ext_pow(&self, k: u32) -> Self {
        let mut e: Vec<ClassFunction> = vec![Self::trivial(&self.group)];
        for j in 1..=k {
            let mut acc = Self::zero(&self.group);
            for i in 1..=j {
                let term = self.adams(i as i64).mul(&e[(j - i) as usize]);
                acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
            }
            let inv_j = BigRational::new(BigInt::one(), BigInt::from(j));
            e.push(acc.scale(&inv_j));
        }
        e.pop().unwrap().with_name(format!("ext{k}({})", self.name))
    }

    /// Determinant character of a degree-2 character: its exterior square.
    pub fn det2(&self) -> Result<Self> {
        if self.degree_int() != Some(2) {
            return Err(Error::ShapeViolation(format!(
                "det2 needs a degree-2 character, `{}` has degree {}",
                self.name,
                self.degree()
            )));
        }
        Ok(self.ext_pow(2).with_name(format!("det({})", self.name)))
    }

    /// Adjoint of a degree-2 character: sym^2 times the inverse
    /// determinant (degree 3).
    pub fn adjoint2(&self) -> Result<Self> {
        let det = self.det2()?;
        Ok(self
            .sym_pow(2)
            .mul(&det.conj_char())
            .with_name(format!("Ad({})", self.name)))
    }

    /// Twisted fourth symmetric power of a degree-2 character:
    /// sym^4 times the inverse square of the determinant (degree 5).
    pub fn a4_twist(&self) -> Result<Self> {
        let det = self.det2()?;
        let det2inv = det.conj_char().mul(&det.conj_char());
        Ok(self
            .sym_pow(4)
            .mul(&det2inv)
            .with_name(format!("A4({})", self.name)))
    }

    /// Exact inner product (1/|G|) sum |C| a(C) conj(b(C)).
    pub fn inner(&self, other: &Self) -> Cyclotomic {
        debug_assert!(Arc::ptr_eq(&self.group, &other.group));
        let mut acc = Cyclotomic::zero(1);
        for (c, (a, b)) in self.values.iter().zip(&other.values).enumerate() {
            let size = BigRational::from_integer(BigInt::from(self.group.class_size(c)));
            acc = acc.add(&a.mul(&b.conj()).scale(&size));
        }
        acc.div_rational(&BigRational::from_integer(BigInt::from(self.group.order())))
    }

    /// Squared norm as a rational, if the inner product is rational.
    pub fn norm_sq(&self) -> Option<BigRational> {
        self.inner(self).as_rational()
    }

    pub fn is_irreducible(&self) -> bool {
        self.norm_sq().map(|n| n.is_one()).unwrap_or(false)
            && self.values[0]
                .as_rational()
                .map(|d| d.is_positive())
                .unwrap_or(false)
    }

    pub fn is_linear(&self) -> bool {
        self.degree_int() == Some(1)
    }

    pub fn is_trivial_char(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_one)
    }

    /// Multiplicative order of a linear character.
    pub fn multiplicative_order(&self) -> Result<u64> {
        if !self.is_linear() {
            return Err(Error::ShapeViolation(format!(
                "`{}` is not linear",
                self.name
            )));
        }
        let mut acc = self.clone();
        for k in 1..=(self.group.exponent() as u64) {
            if acc.is_trivial_char() {
                return Ok(k);
            }
            acc = acc.mul(self);
        }
        Err(Error::ShapeViolation(format!(
            "order of `{}` exceeds the group exponent",
            self.name
        )))
    }

    /// Canonical key used for dedup and sorting.
    fn key(&self) -> String {
        values_key(&self.values, self.group.exponent())
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}: {}", self.name, vals.join(" "))
    }
}

/// Sort irreducibles canonically (degree, then value key) and name them
/// `chi1..chik`.
fn canonical_table(
    group: &Arc<FiniteGroup>,
    mut entries: Vec<Vec<Cyclotomic>>,
) -> Vec<(String, Vec<Cyclotomic>)> {
    entries.sort_by_key(|v| {
        let deg = v[0].as_rational().expect("character degree is rational");
        (deg, values_key(v, group.exponent()))
    });
    entries
        .into_iter()
        .enumerate()
        .map(|(i, v)| (format!("chi{}", i + 1), v))
        .collect()
}

/// Check row orthogonality and completeness (sum of squared degrees).
pub fn validate_orthogonality(group: &Arc<FiniteGroup>, table: &[ClassFunction]) -> Result<()> {
    if table.len() != group.num_classes() {
        return Err(Error::GroupInput(format!(
            "table has {} characters, group has {} classes",
            table.len(),
            group.num_classes()
        )));
    }
    let mut sumsq = BigRational::zero();
    for (i, a) in table.iter().enumerate() {
        for (j, b) in table.iter().enumerate() {
            let ip = a.inner(b);
            let expected = if i == j { Cyclotomic::one(1) } else { Cyclotomic::zero(1) };
            if ip != expected {
                return Err(Error::GroupInput(format!(
                    "characters {} and {} are not orthonormal (inner product {})",
                    a.name(),
                    b.name(),
                    ip
                )));
            }
        }
        let d = a
            .degree()
            .as_rational()
            .ok_or_else(|| Error::GroupInput("irrational character degree".into()))?;
        sumsq += &d * &d;
    }
    if sumsq != BigRational::from_integer(BigInt::from(group.order())) {
        return Err(Error::GroupInput(format!(
            "squared degrees sum to {sumsq}, expected the group order {}",
            group.order()
        )));
    }
    Ok(())
}

/// Build the irreducible character table by closing a seed set (linear
/// characters, model seeds, and if needed characters induced from cyclic
/// subgroups) under tensor products, Adams operations, and stripping of
/// known constituents.
fn build_irreducibles(group: &Arc<FiniteGroup>) -> Result<Vec<(String, Vec<Cyclotomic>)>> {
    let order = BigRational::from_integer(BigInt::from(group.order()));
    let mut irrs: Vec<ClassFunction> = Vec::new();
    let mut lumps: Vec<ClassFunction> = Vec::new();
    let mut queue: VecDeque<ClassFunction> = VecDeque::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut sumsq = BigRational::zero();

    for lin in group.linear_characters()? {
        queue.push_back(lin);
    }
    for seed in &group.seeds {
        queue.push_back(ClassFunction::new_unchecked(
            group,
            "seed".to_string(),
            seed.clone(),
        ));
    }

    let mut cyclic_stage_done = false;
    loop {
        while let Some(cand) = queue.pop_front() {
            if sumsq == order {
                break;
            }
            if !seen.insert(cand.key()) {
                continue;
            }
            // Strip known irreducible constituents.
            let mut rem = cand;
            for irr in &irrs {
                let m = rem.inner(irr);
                if m.is_zero() {
                    continue;
                }
                let m = m
                    .as_rational()
                    .ok_or_else(|| Error::GroupInput("non-rational multiplicity".into()))?;
                rem = rem.sub(&irr.scale(&m));
            }
            if rem.is_zero() {
                continue;
            }
            let norm = match rem.norm_sq() {
                Some(n) => n,
                None => continue,
            };
            if norm.is_one() {
                let deg = rem.degree().as_rational().unwrap_or_else(BigRational::zero);
                let new_irr = if deg.is_positive() { rem } else { rem.neg() };
                let deg = new_irr.degree().as_rational().unwrap();
                sumsq += &deg * &deg;
                // New candidates: tensor with everything known, Adams maps.
                for other in irrs.iter().chain(std::iter::once(&new_irr)) {
                    queue.push_back(new_irr.mul(other));
                }
                queue.push_back(new_irr.adams(2));
                queue.push_back(new_irr.adams(3));
                queue.push_back(new_irr.conj_char());
                irrs.push(new_irr);
                // Retry stashed lumps now that the table grew.
                for lump in lumps.drain(..) {
                    seen.remove(&lump.key());
                    queue.push_back(lump);
                }
                if sumsq == order {
                    break;
                }
            } else {
                lumps.push(rem);
            }
        }
        if sumsq == order {
            break;
        }
        if cyclic_stage_done {
            return Err(Error::NoTable {
                group: group.name.clone(),
                detail: format!(
                    "closure found {} irreducible characters of {} classes",
                    irrs.len(),
                    group.num_classes()
                ),
            });
        }
        // Second stage: induce linear characters from cyclic subgroups.
        cyclic_stage_done = true;
        for sub in group.cyclic_subgroups() {
            if sub.group().order() == group.order() {
                continue;
            }
            for lin in sub.group().linear_characters()? {
                queue.push_back(sub.induce(&lin)?);
            }
        }
        if queue.is_empty() {
            return Err(Error::NoTable {
                group: group.name.clone(),
                detail: "no candidates beyond cyclic induction".to_string(),
            });
        }
    }

    let table = canonical_table(group, irrs.into_iter().map(|f| f.values).collect());
    // Safety net: the closure can only terminate with a genuine table,
    // but validate anyway so corrupt input surfaces here.
    let fns: Vec<ClassFunction> = table
        .iter()
        .map(|(n, v)| ClassFunction::new_unchecked(group, n.clone(), v.clone()))
        .collect();
    validate_orthogonality(group, &fns)?;
    Ok(table)
}

/// Classification of an irreducible degree-2 character by its projective
/// image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum TwoDimClass {
    Reducible,
    /// Projective image dihedral of order 2n.
    Dihedral { n: u32 },
    Tetrahedral,
    Octahedral,
    Primitive,
}

impl fmt::Display for TwoDimClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoDimClass::Reducible => write!(f, "reducible"),
            TwoDimClass::Dihedral { n } => write!(f, "dihedral (projective image of order {})", 2 * n),
            TwoDimClass::Tetrahedral => write!(f, "tetrahedral"),
            TwoDimClass::Octahedral => write!(f, "octahedral"),
            TwoDimClass::Primitive => write!(f, "primitive (icosahedral)"),
        }
    }
}

/// Nontrivial linear characters eta with chi * eta == chi.
pub fn self_twists(chi: &ClassFunction) -> Result<Vec<ClassFunction>> {
    let mut out = Vec::new();
    for eta in chi.group().linear_characters()? {
        if eta.is_trivial_char() {
            continue;
        }
        if &chi.mul(&eta) == chi {
            out.push(eta);
        }
    }
    Ok(out)
}

/// A linear character eta with conj(chi) == chi * eta, if one exists.
pub fn essentially_selfdual_twist(chi: &ClassFunction) -> Result<Option<ClassFunction>> {
    let dual = chi.conj_char();
    for eta in chi.group().linear_characters()? {
        if chi.mul(&eta) == dual {
            return Ok(Some(eta));
        }
    }
    Ok(None)
}

/// Classify an irreducible degree-2 character: reducible, dihedral (with
/// the projective order), tetrahedral, octahedral, or primitive.
pub fn classify_2dim(chi: &ClassFunction) -> Result<TwoDimClass> {
    if chi.degree_int() != Some(2) {
        return Err(Error::ShapeViolation(format!(
            "classification needs degree 2, `{}` has degree {}",
            chi.name(),
            chi.degree()
        )));
    }
    if !chi.is_irreducible() {
        return Ok(TwoDimClass::Reducible);
    }
    // Projective kernel: classes where |chi| equals the degree.
    let four = Cyclotomic::from_integer(1, 4);
    let group = chi.group();
    let mut z = 0usize;
    for c in 0..group.num_classes() {
        let v = chi.value_at_class(c);
        if v.mul(&v.conj()) == four {
            z += group.class_size(c);
        }
    }
    debug_assert_eq!(group.order() % z, 0);
    let proj_order = (group.order() / z) as u32;
    if !self_twists(chi)?.is_empty() {
        return Ok(TwoDimClass::Dihedral { n: proj_order / 2 });
    }
    Ok(match proj_order {
        12 => TwoDimClass::Tetrahedral,
        24 => TwoDimClass::Octahedral,
        _ => TwoDimClass::Primitive,
    })
}

/// Decompose a character into irreducibles with multiplicities.
pub fn decompose(f: &ClassFunction) -> Result<Vec<(ClassFunction, u64)>> {
    let table = f.group().irreducibles()?;
    let mut out = Vec::new();
    let mut rebuilt = ClassFunction::zero(f.group());
    for irr in table {
        let m = f.inner(&irr);
        if m.is_zero() {
            continue;
        }
        let m = m
            .as_rational()
            .filter(|r| r.is_integer() && r.is_positive())
            .ok_or_else(|| {
                Error::NonCharacter(format!(
                    "`{}` has non-integral multiplicity {} at {}",
                    f.name(),
                    f.inner(&irr),
                    irr.name()
                ))
            })?;
        let count = u64::try_from(m.to_integer()).map_err(|_| {
            Error::NonCharacter("multiplicity out of range".into())
        })?;
        rebuilt = rebuilt.add(&irr.scale(&m));
        out.push((irr, count));
    }
    if &rebuilt != f {
        return Err(Error::NonCharacter(format!(
            "`{}` is not a non-negative combination of irreducible characters",
            f.name()
        )));
    }
    Ok(out)
}

/// Clifford-theory scan over every normal subgroup of prime index 2 or 3:
/// each irreducible of the big group either restricts irreducibly or is
/// induced; conjugation-fixed irreducibles downstairs extend; the
/// self-twist criterion for being induced holds on the nose.
pub fn mackey_induced_checks(group: &Arc<FiniteGroup>) -> Result<RunReport> {
    let mut report = RunReport::new(format!("prime-index Clifford checks for {}", group.name()));
    let irrs = group.irreducibles()?;
    for p in [2u32, 3] {
        for (si, sub) in group.normal_subgroups_of_prime_index(p)?.iter().enumerate() {
            let tag = format!("index-{p} normal subgroup #{si}");
            // The order-p linear character cutting out the subgroup.
            let eta = group
                .linear_characters()?
                .into_iter()
                .find(|eta| {
                    eta.multiplicative_order().map(|o| o == p as u64).unwrap_or(false)
                        && sub.elements().iter().all(|&g| eta.at_element(g).is_one())
                })
                .ok_or_else(|| Error::GroupInput("missing cutting character".into()))?;
            let sub_irrs = sub.group().irreducibles()?;
            for chi in &irrs {
                let res = sub.restrict(chi)?;
                let norm = res.norm_sq().unwrap_or_else(BigRational::zero);
                let twisted_equal = &chi.mul(&eta) == chi;
                if norm.is_one() {
                    report.record(
                        format!("{tag}: {} restricts irreducibly", chi.name()),
                        !twisted_equal,
                        "irreducible restriction must not be eta-selftwisted",
                    );
                } else {
                    let expected = BigRational::from_integer(BigInt::from(p));
                    let mut ok = norm == expected && twisted_equal;
                    // It must actually be induced from a constituent.
                    if ok {
                        let mut induced_match = false;
                        for (nu, _) in decompose(&res)? {
                            if &sub.induce(&nu)? == chi {
                                induced_match = true;
                                break;
                            }
                        }
                        ok = induced_match;
                    }
                    report.record(
                        format!("{tag}: {} is induced", chi.name()),
                        ok,
                        format!("restriction norm {norm}, self-twist by cutting character"),
                    );
                }
            }
            // Conjugation-fixed irreducibles downstairs extend.
            let outside = (0..group.order() as u32)
                .find(|&g| !sub.contains(g))
                .expect("proper subgroup");
            for nu in &sub_irrs {
                let fixed = &sub.conjugate_class_function(nu, outside)? == nu;
                let extends = irrs.iter().any(|chi| {
                    sub.restrict(chi).map(|r| &r == nu).unwrap_or(false)
                });
                report.record(
                    format!("{tag}: {} fixed-iff-extends", nu.name()),
                    fixed == extends,
                    format!("conjugation-fixed {fixed}, extends {extends}"),
                );
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::catalog;

    #[test]
    fn s3_from_permutations() {
        let g = catalog::symmetric3().unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_classes(), 3);
        let table = g.irreducibles().unwrap();
        let mut degs: Vec<i64> = table.iter().map(|f| f.degree_int().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2]);
        validate_orthogonality(&g, &table).unwrap();
    }

    #[test]
    fn parse_round_trip_with_chartable() {
        let g = catalog::symmetric3().unwrap();
        let mut text = format!("group S3copy\norder {}\ntable\n", g.order());
        for a in 0..g.order() as u32 {
            let row: Vec<String> = (0..g.order() as u32)
                .map(|b| g.mul(a, b).to_string())
                .collect();
            text.push_str(&row.join(" "));
            text.push('\n');
        }
        text.push_str("end\nchartable\n");
        for f in g.irreducibles().unwrap() {
            let vals: Vec<String> = f.values().iter().map(|v| v.to_string()).collect();
            text.push_str(&format!("{}: {}\n", f.name(), vals.join(" ")));
        }
        text.push_str("end\n");
        let h = FiniteGroup::parse(&text).unwrap();
        assert_eq!(h.order(), 6);
        assert_eq!(h.num_classes(), 3);
        let table = h.irreducibles().unwrap();
        validate_orthogonality(&h, &table).unwrap();

        // A corrupted table is rejected.
        let bad = text.replace("chi3", "chi3bad").replace("2 0 -1", "2 0 1");
        assert!(FiniteGroup::parse(&bad).is_err());
    }

    #[test]
    fn linear_characters_counts() {
        for (g, expected) in [
            (catalog::symmetric4().unwrap(), 2),
            (catalog::alternating4().unwrap(), 3),
            (catalog::dihedral(4).unwrap(), 4),
            (catalog::dihedral(5).unwrap(), 2),
            (catalog::cyclic(12).unwrap(), 12),
        ] {
            assert_eq!(g.linear_characters().unwrap().len(), expected, "{}", g.name());
        }
    }

    #[test]
    fn frobenius_reciprocity() {
        let g = catalog::symmetric4().unwrap();
        let idx3 = g.index3_subgroup_classes().unwrap();
        assert_eq!(idx3.len(), 1);
        let (sub, normal) = &idx3[0];
        assert!(!normal);
        assert_eq!(sub.group().order(), 8);
        for lam in sub.group().linear_characters().unwrap() {
            let ind = sub.induce(&lam).unwrap();
            for chi in g.irreducibles().unwrap() {
                let lhs = ind.inner(&chi);
                let rhs = lam.inner(&sub.restrict(&chi).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn classification_families() {
        // The 2-dim of S4 factors through S3: dihedral with projective
        // image of order 6.
        let s4 = catalog::symmetric4().unwrap();
        let two = s4
            .irreducibles()
            .unwrap()
            .into_iter()
            .find(|f| f.degree_int() == Some(2))
            .unwrap();
        assert_eq!(classify_2dim(&two).unwrap(), TwoDimClass::Dihedral { n: 3 });

        // Faithful 2-dims of SL(2,3) are tetrahedral.
        let sl = catalog::sl23().unwrap();
        let mut tetra = 0;
        for f in sl.irreducibles().unwrap() {
            if f.degree_int() == Some(2) {
                assert_eq!(classify_2dim(&f).unwrap(), TwoDimClass::Tetrahedral);
                tetra += 1;
            }
        }
        assert_eq!(tetra, 3);

        // Faithful 2-dims of GL(2,3) are octahedral, with traces +-sqrt(-2)
        // on the order-8 classes.
        let gl = catalog::gl23().unwrap();
        let mut oct = 0;
        let minus_two = Cyclotomic::from_integer(1, -2);
        for f in gl.irreducibles().unwrap() {
            if f.degree_int() == Some(2) && self_twists(&f).unwrap().is_empty() {
                match classify_2dim(&f).unwrap() {
                    TwoDimClass::Octahedral => {
                        oct += 1;
                        let has_sqrt_m2 = f
                            .values()
                            .iter()
                            .any(|v| v.mul(v) == minus_two);
                        assert!(has_sqrt_m2, "octahedral trace field must contain sqrt(-2)");
                    }
                    TwoDimClass::Dihedral { .. } => {}
                    other => panic!("unexpected class {other:?}"),
                }
            }
        }
        assert_eq!(oct, 2);
    }

    #[test]
    fn dihedral_two_dims_classify_dihedral() {
        for n in [3u32, 4, 5, 6] {
            let g = catalog::dihedral(n).unwrap();
            for f in g.irreducibles().unwrap() {
                if f.degree_int() == Some(2) {
                    match classify_2dim(&f).unwrap() {
                        TwoDimClass::Dihedral { n: m } => {
                            assert!(m >= 2 && m <= n, "projective order 2m with m <= n");
                        }
                        other => panic!("D{} 2-dim classified {:?}", 2 * n, other),
                    }
                }
            }
        }
    }

    #[test]
    fn f21_structure() {
        let g = catalog::frobenius21().unwrap();
        assert_eq!(g.order(), 21);
        assert_eq!(g.num_classes(), 5);
        let table = g.irreducibles().unwrap();
        let mut degs: Vec<i64> = table.iter().map(|f| f.degree_int().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 3, 3]);
        // 3-dims are induced from the normal C7 and have cubic
        // self-twists, but are not essentially self-dual.
        let idx3 = g.index3_subgroup_classes().unwrap();
        assert_eq!(idx3.len(), 1);
        assert!(idx3[0].1, "C7 in F21 is normal");
        for f in &table {
            if f.degree_int() == Some(3) {
                assert_eq!(self_twists(f).unwrap().len(), 2);
                assert!(essentially_selfdual_twist(f).unwrap().is_none());
            }
        }
    }

    #[test]
    fn a4_std_selftwists() {
        let g = catalog::alternating4().unwrap();
        let std = g
            .irreducibles()
            .unwrap()
            .into_iter()
            .find(|f| f.degree_int() == Some(3))
            .unwrap();
        assert_eq!(self_twists(&std).unwrap().len(), 2);
        assert!(essentially_selfdual_twist(&std).unwrap().is_some());
        let idx3 = g.index3_subgroup_classes().unwrap();
        assert_eq!(idx3.len(), 1);
        assert!(idx3[0].1, "V4 in A4 is normal");
    }

    #[test]
    fn sl23_tensor_decompositions() {
        let g = catalog::sl23().unwrap();
        let table = g.irreducibles().unwrap();
        let rho = table
            .iter()
            .find(|f| f.degree_int() == Some(2))
            .unwrap()
            .clone();
        let ad = rho.adjoint2().unwrap();
        assert!(ad.is_irreducible());
        // rho x Ad(rho) splits into three 2-dims (the twists of rho).
        let parts = decompose(&rho.mul(&ad)).unwrap();
        let mut degs: Vec<(i64, u64)> = parts
            .iter()
            .map(|(f, m)| (f.degree_int().unwrap(), *m))
            .collect();
        degs.sort();
        assert_eq!(degs, vec![(2, 1), (2, 1), (2, 1)]);
        // Tetrahedral twisted fourth power: A4(rho) = Ad + the two
        // nontrivial linears.
        let a4 = rho.a4_twist().unwrap();
        let parts = decompose(&a4).unwrap();
        let mut degs: Vec<i64> = parts.iter().map(|(f, _)| f.degree_int().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 3]);
        // Ad x Ad = 1 + Ad + A4.
        let lhs = ad.mul(&ad);
        let rhs = ClassFunction::trivial(&g).add(&ad).add(&a4);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gl23_tensor_decompositions() {
        let g = catalog::gl23().unwrap();
        let table = g.irreducibles().unwrap();
        let rho = table
            .iter()
            .find(|f| f.degree_int() == Some(2) && classify_2dim(f).unwrap() == TwoDimClass::Octahedral)
            .unwrap()
            .clone();
        let ad = rho.adjoint2().unwrap();
        assert!(ad.is_irreducible());
        // rho x Ad(rho) = rho + 4-dim.
        let parts = decompose(&rho.mul(&ad)).unwrap();
        let mut degs: Vec<i64> = parts.iter().map(|(f, _)| f.degree_int().unwrap()).collect();
        degs.sort();
        assert_eq!(degs, vec![2, 4]);
        // Octahedral twisted fourth power: A4(rho) = Ind(cubic from the
        // index-2 subgroup) + Ad * det.
        let sl = g.subgroup(&[g.generators()[0], g.generators()[1]]).unwrap();
        assert_eq!(sl.group().order(), 24);
        assert!(sl.is_normal());
        let cubic = sl
            .group()
            .linear_characters()
            .unwrap()
            .into_iter()
            .find(|f| f.multiplicative_order().unwrap() == 3)
            .unwrap();
        let ind = sl.induce(&cubic).unwrap();
        assert!(ind.is_irreducible());
        assert_eq!(ind.degree_int(), Some(2));
        let det = rho.det2().unwrap();
        let rhs = ind.add(&ad.mul(&det));
        assert_eq!(rho.a4_twist().unwrap(), rhs);
        // Ad x Ad = 1 + Ad + A4 here as well.
        let lhs = ad.mul(&ad);
        let rhs = ClassFunction::trivial(&g).add(&ad).add(&rho.a4_twist().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_group_ext_square_identity() {
        // ext^2 of an external tensor of two 2-dims splits as
        // (Ad(x1) lifted + Ad(x2) lifted) * (det1 x det2). When one factor
        // is dihedral its adjoint itself splits into three linears.
        let ext2_constituents = |a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>| -> Vec<i64> {
            let g = FiniteGroup::direct_product(a, b).unwrap();
            let table = g.irreducibles().unwrap();
            assert_eq!(table.len(), a.num_classes() * b.num_classes());
            let four = table
                .iter()
                .find(|f| f.degree_int() == Some(4))
                .expect("4-dim external tensor");
            let parts = decompose(&four.ext_pow(2)).unwrap();
            let mut degs: Vec<i64> = parts
                .iter()
                .flat_map(|(f, m)| {
                    std::iter::repeat(f.degree_int().unwrap()).take(*m as usize)
                })
                .collect();
            degs.sort();
            degs
        };
        let sl = catalog::sl23().unwrap();
        // Both factors non-dihedral: two irreducible adjoints.
        assert_eq!(ext2_constituents(&sl, &sl), vec![3, 3]);
        // Dihedral second factor: its adjoint is 1 + two linears.
        let d8 = catalog::dihedral(4).unwrap();
        assert_eq!(ext2_constituents(&sl, &d8), vec![1, 1, 1, 3]);
    }

    #[test]
    fn sym_ext_square_consistency() {
        // sym^2 + ext^2 = tensor square for every irreducible of S4.
        let g = catalog::symmetric4().unwrap();
        for f in g.irreducibles().unwrap() {
            let lhs = f.sym_pow(2).add(&f.ext_pow(2));
            assert_eq!(lhs, f.mul(&f));
            // adams consistency: psi2 = sym2 - ext2
            let psi2 = f.sym_pow(2).sub(&f.ext_pow(2));
            assert_eq!(psi2, f.adams(2));
        }
    }

    #[test]
    fn mackey_scan_passes() {
        for g in [
            catalog::symmetric4().unwrap(),
            catalog::sl23().unwrap(),
            catalog::gl23().unwrap(),
            catalog::alternating4().unwrap(),
            catalog::frobenius21().unwrap(),
        ] {
            let report = mackey_induced_checks(&g).unwrap();
            assert!(report.all_passed(), "{report}");
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let g = catalog::symmetric3().unwrap();
        let table = g.irreducibles().unwrap();
        let virtual_char = table[0].sub(&table[1]);
        assert!(decompose(&virtual_char).is_err());
    }

    #[test]
    fn describe_is_stable() {
        let g = catalog::symmetric3().unwrap();
        let d1 = g.describe();
        let d2 = g.describe();
        assert_eq!(d1, d2);
        assert!(d1.contains("order 6"));
    }
}
