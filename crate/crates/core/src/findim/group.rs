use crate::error::{Error, Result};
use std::collections::VecDeque;

/// Finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 || labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table must be square with entries below its size".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{} has no inverse", labels[x])))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative on ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, table, identity, inverse })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let n = n.max(1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table((0..n).map(|k| k.to_string()).collect(), table).expect("cyclic group")
    }

    /// `ℤ/n_1 × ℤ/n_2 × ...` with mixed-radix indexing, first factor most significant.
    pub fn product(ns: &[usize]) -> FiniteGroup {
        ns.iter()
            .map(|&n| FiniteGroup::cyclic(n))
            .reduce(|a, b| a.direct(&b))
            .unwrap_or_else(FiniteGroup::trivial)
    }

    /// Symmetric group on `n` points; elements are permutations in one-line
    /// notation, lexicographically ordered, composed as functions.
    pub fn sym(n: usize) -> FiniteGroup {
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for k in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    (0..=k).map(move |pos| {
                        let mut q = p.clone();
                        q.insert(pos, k);
                        q
                    })
                })
                .collect();
        }
        perms.sort();
        let idx = |p: &Vec<usize>| perms.binary_search(p).unwrap();
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| idx(&t.iter().map(|&i| s[i]).collect())).collect())
            .collect();
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|i| i.to_string()).collect::<String>())
            .collect();
        FiniteGroup::from_table(labels, table).expect("symmetric group")
    }

    pub fn direct(&self, o: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), o.order());
        let table = (0..n * m)
            .map(|x| (0..n * m).map(|y| self.mul(x / m, y / m) * m + o.mul(x % m, y % m)).collect())
            .collect();
        let labels = (0..n * m)
            .map(|x| {
                let (a, b) = (&self.labels[x / m], &o.labels[x % m]);
                let a = a.trim_start_matches('(').trim_end_matches(')');
                format!("({a},{b})")
            })
            .collect();
        FiniteGroup::from_table(labels, table).expect("direct product")
    }

    /// `cyclic:n`, `product:[n1,n2,...]`, `sym:n`, or a JSON multiplication table.
    pub fn parse(spec: &str) -> Result<FiniteGroup> {
        let s = spec.trim();
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad group size `{t}`")))
        };
        if let Some(t) = s.strip_prefix("cyclic:") {
            return Ok(FiniteGroup::cyclic(num(t)?));
        }
        if let Some(t) = s.strip_prefix("sym:") {
            let n = num(t)?;
            if n > 6 {
                return Err(Error::InvalidGroup(format!("sym:{n} is too large")));
            }
            return Ok(FiniteGroup::sym(n));
        }
        if let Some(t) = s.strip_prefix("product:") {
            let ns = t
                .trim()
                .trim_start_matches('[')
                .trim_end_matches(']')
                .split(',')
                .map(num)
                .collect::<Result<Vec<_>>>()?;
            return Ok(FiniteGroup::product(&ns));
        }
        let table: Vec<Vec<usize>> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        FiniteGroup::from_table((0..table.len()).map(|k| k.to_string()).collect(), table)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|x| self.element_order(x)).fold(1, lcm)
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|x| self.element_order(x) == self.order())
    }

    /// Subgroup generated by `gens`, as a membership mask.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Greedy generating set, preferring elements of large order.
    pub fn generators(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.order()).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(self.element_order(x)));
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for x in order {
            if !span[x] {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Extends an assignment on generators to a homomorphism into `o`, if one exists.
    pub fn extend_hom(&self, gens: &[usize], images: &[usize], o: &FiniteGroup) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order()];
        map[self.identity] = o.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let v = o.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = v;
                    queue.push_back(y);
                } else if map[y] != v {
                    return None;
                }
            }
        }
        if map.contains(&usize::MAX) {
            return None;
        }
        let n = self.order();
        let hom = (0..n).all(|a| (0..n).all(|b| map[self.mul(a, b)] == o.mul(map[a], map[b])));
        hom.then_some(map)
    }

    /// An explicit isomorphism `self → o`, found by assigning generator images.
    pub fn find_isomorphism(&self, o: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order() != o.order() {
            return None;
        }
        let gens = self.generators();
        let cands: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let k = self.element_order(g);
                (0..o.order()).filter(|&y| o.element_order(y) == k).collect()
            })
            .collect();
        let mut choice = vec![0usize; gens.len()];
        if cands.iter().any(|c| c.is_empty()) {
            return None;
        }
        loop {
            let images: Vec<usize> = choice.iter().zip(&cands).map(|(&i, c)| c[i]).collect();
            if let Some(map) = self.extend_hom(&gens, &images, o) {
                let mut hit = vec![false; o.order()];
                map.iter().for_each(|&y| hit[y] = true);
                if hit.iter().all(|&h| h) {
                    return Some(map);
                }
            }
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return None;
                }
                choice[i] += 1;
                if choice[i] < cands[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions() {
        assert_eq!(FiniteGroup::sym(3).order(), 6);
        assert!(!FiniteGroup::sym(3).is_abelian());
        let g = FiniteGroup::product(&[2, 3]);
        assert!(g.is_cyclic());
        assert_eq!(g.exponent(), 6);
        assert!(FiniteGroup::product(&[2, 2]).find_isomorphism(&FiniteGroup::cyclic(4)).is_none());
        assert!(g.find_isomorphism(&FiniteGroup::cyclic(6)).is_some());
        assert_eq!(FiniteGroup::parse("product:[2,2,2]").unwrap().order(), 8);
        assert_eq!(FiniteGroup::parse("[[0,1],[1,0]]").unwrap().order(), 2);
        assert!(FiniteGroup::parse("[[0,1],[0,1]]").is_err());
        assert!(FiniteGroup::parse("klein").is_err());
    }
}
