//! Finite groups from generators and relations, by Todd–Coxeter coset
//! enumeration over the trivial subgroup.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Largest group order the enumerator will produce.
pub const ORDER_CAP: usize = 10_000;

/// Upper bound on cosets defined during enumeration, live or dead.
const DEFINITION_CAP: usize = 300_000;

/// A word as `(generator index, ±1)` letters.
pub type Word = Vec<(usize, i8)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Parses relations such as `"a^6"`, `"b a b^-1 = a^-1"` or `"a^3=b^2=1"`.
    /// Letters are matched greedily against the generator names; `*` and
    /// whitespace are separators, `1` and `e` denote the identity.
    pub fn parse<S: AsRef<str>>(generators: &[S], relations: &[S]) -> Result<Self> {
        let generators: Vec<String> = generators.iter().map(|g| g.as_ref().trim().to_string()).collect();
        for (i, g) in generators.iter().enumerate() {
            if g.is_empty() || g == "e" || g == "1" {
                return Err(Error::Presentation(format!("invalid generator name {g:?}")));
            }
            if !g.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Presentation(format!("invalid generator name {g:?}")));
            }
            if generators[..i].contains(g) {
                return Err(Error::DuplicateIdentifier(g.clone()));
            }
        }
        let mut relators = Vec::new();
        for rel in relations {
            let sides: Vec<Word> = rel
                .as_ref()
                .split('=')
                .map(|side| parse_word(&generators, side))
                .collect::<Result<_>>()?;
            if sides.len() == 1 {
                relators.push(sides.into_iter().next().unwrap());
            } else {
                for pair in sides.windows(2) {
                    let mut r = pair[0].clone();
                    r.extend(invert(&pair[1]));
                    relators.push(r);
                }
            }
        }
        Ok(Self { generators, relators: relators.into_iter().map(|r| free_reduce(&r)).collect() })
    }

    /// Enumerates the group. Elements are labelled by their shortest word in
    /// the positive generators (ties broken by generator order), with `e`
    /// for the identity and runs written as powers, e.g. `a^2b`.
    pub fn enumerate(&self) -> Result<FiniteGroup> {
        let k = self.generators.len();
        if k == 0 {
            return Ok(FiniteGroup::trivial());
        }
        let mut table = CosetTable::new(k);
        table.run(&self.relators)?;
        let perms = table.compact();
        let n = perms[0].len();
        if n > ORDER_CAP {
            return Err(Error::Presentation(format!("group order {n} exceeds the cap of {ORDER_CAP}")));
        }

        // Shortest positive words by BFS; right multiplication by g sends
        // coset c to perms[g][c].
        let mut word: Vec<Option<Vec<usize>>> = vec![None; n];
        let mut order = Vec::with_capacity(n);
        word[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            order.push(c);
            for (g, perm) in perms.iter().enumerate() {
                let d = perm[c];
                if word[d].is_none() {
                    let mut w = word[c].clone().unwrap();
                    w.push(g);
                    word[d] = Some(w);
                    queue.push_back(d);
                }
            }
        }
        // element i is coset order[i]
        let mut element_of = vec![0; n];
        for (i, &c) in order.iter().enumerate() {
            element_of[c] = i;
        }
        let sep = if self.generators.iter().all(|g| g.chars().count() == 1) { "" } else { "*" };
        let labels: Vec<String> = order
            .iter()
            .map(|&c| word_label(&self.generators, word[c].as_ref().unwrap(), sep))
            .collect();

        // right_mult[v][c] = c·v, built along the BFS tree
        let mut right_mult: Vec<Vec<usize>> = vec![Vec::new(); n];
        right_mult[0] = (0..n).collect();
        for &c in order.iter().skip(1) {
            let w = word[c].as_ref().unwrap();
            let (last, prefix) = w.split_last().unwrap();
            let parent = prefix.iter().fold(0, |acc, &g| perms[g][acc]);
            let p = &right_mult[parent];
            right_mult[c] = p.iter().map(|&x| perms[*last][x]).collect();
        }
        let mut mul = vec![0; n * n];
        for (ui, &u) in order.iter().enumerate() {
            for (vi, &v) in order.iter().enumerate() {
                mul[ui * n + vi] = element_of[right_mult[v][u]];
            }
        }
        Ok(FiniteGroup::from_raw(labels, mul, 0))
    }
}

fn parse_word(generators: &[String], text: &str) -> Result<Word> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut word = Word::new();
    let err = |msg: String| Error::Presentation(format!("{msg} in {:?}", text.trim()));
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '*' {
            i += 1;
            continue;
        }
        let rest: String = chars[i..].iter().collect();
        let found = generators
            .iter()
            .enumerate()
            .filter(|(_, g)| rest.starts_with(g.as_str()))
            .max_by_key(|(_, g)| g.len());
        let (letter, len) = match found {
            Some((gi, g)) => (Some(gi), g.chars().count()),
            None if c == '1' || c == 'e' => (None, 1),
            None => return Err(err(format!("unknown generator at {:?}", rest))),
        };
        i += len;
        let mut exponent: i64 = 1;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && chars[i] == '-' {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            exponent = digits.parse().map_err(|_| err(format!("bad exponent {digits:?}")))?;
        }
        if let Some(gi) = letter {
            let sign = if exponent < 0 { -1 } else { 1 };
            for _ in 0..exponent.unsigned_abs() {
                word.push((gi, sign));
            }
        }
    }
    Ok(word)
}

fn invert(w: &[(usize, i8)]) -> Word {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

fn free_reduce(w: &[(usize, i8)]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        match out.last() {
            Some(&(g, e)) if g == l.0 && e == -l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

fn word_label(generators: &[String], word: &[usize], sep: &str) -> String {
    if word.is_empty() {
        return "e".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let g = &generators[word[i]];
        parts.push(if j - i == 1 { g.clone() } else { format!("{g}^{}", j - i) });
        i = j;
    }
    parts.join(sep)
}

/// HLT coset enumeration with union-find coincidence handling.
struct CosetTable {
    /// Column `2g` is generator `g`, column `2g + 1` its inverse.
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    columns: usize,
}

impl CosetTable {
    fn new(generators: usize) -> Self {
        let columns = 2 * generators;
        Self { table: vec![vec![None; columns]], parent: vec![0], columns }
    }

    fn col((g, e): (usize, i8)) -> usize {
        if e > 0 { 2 * g } else { 2 * g + 1 }
    }

    fn inv_col(x: usize) -> usize {
        x ^ 1
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.table.len() >= DEFINITION_CAP {
            return Err(Error::Presentation(format!(
                "coset enumeration exceeded {DEFINITION_CAP} definitions; the group may be infinite"
            )));
        }
        let d = self.table.len();
        self.table.push(vec![None; self.columns]);
        self.parent.push(d);
        self.table[c][x] = Some(d);
        self.table[d][Self::inv_col(x)] = Some(c);
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = c;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let dead = queue[i];
            i += 1;
            for x in 0..self.columns {
                if let Some(d) = self.table[dead][x] {
                    self.table[d][Self::inv_col(x)] = None;
                    let mu = self.rep(dead);
                    let nu = self.rep(d);
                    if let Some(t) = self.table[mu][x] {
                        self.merge(nu, t, &mut queue);
                    } else if let Some(t) = self.table[nu][Self::inv_col(x)] {
                        self.merge(mu, t, &mut queue);
                    } else {
                        self.table[mu][x] = Some(nu);
                        self.table[nu][Self::inv_col(x)] = Some(mu);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, relator: &[(usize, i8)]) -> Result<()> {
        if relator.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, relator.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                match self.table[f][Self::col(relator[i])] {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                match self.table[b][Self::inv_col(Self::col(relator[j as usize]))] {
                    Some(next) => {
                        b = next;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                let x = Self::col(relator[i]);
                self.table[f][x] = Some(b);
                self.table[b][Self::inv_col(x)] = Some(f);
                return Ok(());
            }
            self.define(f, Self::col(relator[i]))?;
        }
    }

    fn run(&mut self, relators: &[Word]) -> Result<()> {
        let mut c = 0;
        while c < self.table.len() {
            for r in relators {
                if !self.live(c) {
                    break;
                }
                self.scan_and_fill(c, r)?;
            }
            for x in 0..self.columns {
                if !self.live(c) {
                    break;
                }
                if self.table[c][x].is_none() {
                    self.define(c, x)?;
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Renumbers live cosets and returns, per generator, the permutation
    /// `coset ↦ coset·g`.
    fn compact(&self) -> Vec<Vec<usize>> {
        let live: Vec<usize> = (0..self.table.len()).filter(|&c| self.live(c)).collect();
        let mut new_index = vec![usize::MAX; self.table.len()];
        for (i, &c) in live.iter().enumerate() {
            new_index[c] = i;
        }
        (0..self.columns / 2)
            .map(|g| live.iter().map(|&c| new_index[self.table[c][2 * g].expect("complete table")]).collect())
            .collect()
    }
}
