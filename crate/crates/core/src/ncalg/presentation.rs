use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::lattice::Weight;
use crate::scalars::QRational;
use crate::{Error, Result};

/// A word in the generators, stored as generator indices.
pub type Word = Vec<u8>;

/// Default number of rewrite steps allowed per normal-form computation.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

/// Step budget, overridable through `QWONDER_STEP_BUDGET`.
pub fn step_budget() -> usize {
    static BUDGET: OnceLock<usize> = OnceLock::new();
    *BUDGET.get_or_init(|| {
        std::env::var("QWONDER_STEP_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_STEP_BUDGET)
    })
}

/// A rewrite rule `lhs → Σ coeff·word`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Vec<(Word, QRational)>,
}

impl Rule {
    pub fn new(lhs: Word, rhs: Vec<(Word, QRational)>) -> Self {
        Rule { lhs, rhs }
    }
}

/// Sort key realising the monomial order: length, then lexicographic by generator rank.
pub(crate) type OrderKey = (usize, Word, Word);

/// A finitely presented algebra over ℚ(q) as a rewriting system.
///
/// Words are compared by length, then lexicographically by generator rank
/// (by default the declaration order). Every rule must strictly decrease its
/// left-hand side in that order, which makes rewriting terminate.
#[derive(Debug)]
pub struct Presentation {
    name: String,
    symbols: Vec<String>,
    lex_ranks: Vec<u8>,
    rules: Vec<Rule>,
    grading: Option<Vec<Weight>>,
    by_first: Vec<Vec<usize>>,
    budget: Option<usize>,
}

/// Incremental construction of a [`Presentation`]; validation happens in [`build`](Self::build).
#[derive(Clone, Debug)]
pub struct PresentationBuilder {
    name: String,
    symbols: Vec<String>,
    lex_ranks: Option<Vec<u8>>,
    rules: Vec<Rule>,
    grading: Option<Vec<Weight>>,
    budget: Option<usize>,
}

impl PresentationBuilder {
    pub fn new(name: impl Into<String>, symbols: &[&str]) -> Self {
        PresentationBuilder {
            name: name.into(),
            symbols: symbols.iter().map(|s| s.to_string()).collect(),
            lex_ranks: None,
            rules: Vec::new(),
            grading: None,
            budget: None,
        }
    }

    pub fn from_symbols(name: impl Into<String>, symbols: Vec<String>) -> Self {
        PresentationBuilder {
            name: name.into(),
            symbols,
            lex_ranks: None,
            rules: Vec::new(),
            grading: None,
            budget: None,
        }
    }

    pub fn rule(mut self, lhs: Word, rhs: Vec<(Word, QRational)>) -> Self {
        self.rules.push(Rule::new(lhs, rhs));
        self
    }

    pub fn rules(mut self, rules: impl IntoIterator<Item = Rule>) -> Self {
        self.rules.extend(rules);
        self
    }

    pub fn grading(mut self, degrees: Vec<Weight>) -> Self {
        self.grading = Some(degrees);
        self
    }

    /// Rank of each generator in the lexicographic tie-break; must be a permutation.
    pub fn lex_ranks(mut self, ranks: Vec<u8>) -> Self {
        self.lex_ranks = Some(ranks);
        self
    }

    pub fn step_budget(mut self, budget: usize) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn build(self) -> Result<Presentation> {
        let n = self.symbols.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidPresentation(format!(
                "need between 1 and 255 generators, got {n}"
            )));
        }
        for (i, s) in self.symbols.iter().enumerate() {
            if s.is_empty() || !s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidPresentation(format!("bad generator name `{s}`")));
            }
            if self.symbols[..i].contains(s) {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{s}`")));
            }
        }
        let lex_ranks = self.lex_ranks.unwrap_or_else(|| (0..n as u8).collect());
        let mut sorted = lex_ranks.clone();
        sorted.sort_unstable();
        if sorted != (0..n as u8).collect::<Vec<_>>() {
            return Err(Error::InvalidPresentation(
                "generator ranks must be a permutation".into(),
            ));
        }
        if let Some(g) = &self.grading {
            if g.len() != n {
                return Err(Error::InvalidPresentation(format!(
                    "{} degrees for {n} generators",
                    g.len()
                )));
            }
            let rank = g[0].rank();
            if g.iter().any(|w| w.rank() != rank) {
                return Err(Error::InvalidPresentation(
                    "generator degrees have different ranks".into(),
                ));
            }
        }
        let mut p = Presentation {
            name: self.name,
            symbols: self.symbols,
            lex_ranks,
            rules: Vec::new(),
            grading: self.grading,
            by_first: vec![Vec::new(); n],
            budget: self.budget,
        };
        for mut rule in self.rules {
            if rule.lhs.is_empty() {
                return Err(Error::InvalidPresentation("empty left-hand side".into()));
            }
            for w in std::iter::once(&rule.lhs).chain(rule.rhs.iter().map(|(w, _)| w)) {
                if w.iter().any(|&g| g as usize >= n) {
                    return Err(Error::InvalidPresentation("generator index out of range".into()));
                }
            }
            rule.rhs.retain(|(_, c)| !c.is_zero());
            let lhs_key = p.order_key(&rule.lhs);
            for (w, _) in &rule.rhs {
                if p.order_key(w) >= lhs_key {
                    return Err(Error::InvalidPresentation(format!(
                        "rule {} -> ... does not decrease: {} is not smaller",
                        p.word_to_string(&rule.lhs),
                        p.word_to_string(w)
                    )));
                }
                if let Some(g) = &p.grading {
                    let dl = degree_of(g, &rule.lhs);
                    if degree_of(g, w) != dl {
                        return Err(Error::InvalidPresentation(format!(
                            "rule {} -> ... is not homogeneous",
                            p.word_to_string(&rule.lhs)
                        )));
                    }
                }
            }
            p.by_first[rule.lhs[0] as usize].push(p.rules.len());
            p.rules.push(rule);
        }
        Ok(p)
    }
}

fn degree_of(grading: &[Weight], w: &[u8]) -> Weight {
    let rank = grading[0].rank();
    w.iter()
        .fold(Weight::zero(rank), |acc, &g| acc.add(&grading[g as usize]))
}

impl Presentation {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn num_generators(&self) -> usize {
        self.symbols.len()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn grading(&self) -> Option<&[Weight]> {
        self.grading.as_deref()
    }

    pub fn lex_ranks(&self) -> &[u8] {
        &self.lex_ranks
    }

    pub fn budget(&self) -> usize {
        self.budget.unwrap_or_else(step_budget)
    }

    pub fn symbol_index(&self, s: &str) -> Option<u8> {
        self.symbols.iter().position(|x| x == s).map(|i| i as u8)
    }

    /// Parse a word written as a juxtaposition of generator names, matching
    /// the longest generator name at each position.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut out = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let best = self
                .symbols
                .iter()
                .enumerate()
                .filter(|(_, s)| rest.starts_with(s.as_str()))
                .max_by_key(|(_, s)| s.len());
            match best {
                Some((i, s)) => {
                    out.push(i as u8);
                    rest = rest[s.len()..].trim_start();
                }
                None => return Err(Error::UnknownSymbol(rest.to_string())),
            }
        }
        Ok(out)
    }

    pub(crate) fn order_key(&self, w: &[u8]) -> OrderKey {
        let ranked = w.iter().map(|&g| self.lex_ranks[g as usize]).collect();
        (w.len(), ranked, w.to_vec())
    }

    /// Compare two words in the monomial order.
    pub fn word_cmp(&self, u: &[u8], v: &[u8]) -> std::cmp::Ordering {
        self.order_key(u).cmp(&self.order_key(v))
    }

    /// Total degree of a word under the grading.
    pub fn word_degree(&self, w: &[u8]) -> Result<Weight> {
        match &self.grading {
            Some(g) => Ok(degree_of(g, w)),
            None => Err(Error::Ungraded(self.name.clone())),
        }
    }

    /// Leftmost position at which some rule applies.
    pub fn find_redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for &r in &self.by_first[w[pos] as usize] {
                if w[pos..].starts_with(&self.rules[r].lhs) {
                    return Some((pos, r));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.find_redex(w).is_none()
    }

    /// Whether some rule's left-hand side is a suffix of `w`.
    pub(crate) fn has_suffix_redex(&self, w: &[u8]) -> bool {
        self.rules.iter().any(|r| w.ends_with(&r.lhs))
    }

    /// Apply rule `r` at `pos` once, returning the resulting linear combination.
    pub(crate) fn apply_rule(&self, w: &[u8], pos: usize, r: usize) -> Vec<(Word, QRational)> {
        let rule = &self.rules[r];
        let end = pos + rule.lhs.len();
        rule.rhs
            .iter()
            .map(|(rw, c)| {
                let mut nw = Vec::with_capacity(w.len() - rule.lhs.len() + rw.len());
                nw.extend_from_slice(&w[..pos]);
                nw.extend_from_slice(rw);
                nw.extend_from_slice(&w[end..]);
                (nw, c.clone())
            })
            .collect()
    }

    /// Rewrite a linear combination of words to normal form.
    ///
    /// Words are processed from the largest down; since every rewrite step
    /// produces strictly smaller words, each word is visited at most once.
    pub fn reduce(
        &self,
        input: impl IntoIterator<Item = (Word, QRational)>,
    ) -> Result<BTreeMap<Word, QRational>> {
        let budget = self.budget();
        let mut pending: BTreeMap<OrderKey, QRational> = BTreeMap::new();
        for (w, c) in input {
            accumulate(&mut pending, self.order_key(&w), c);
        }
        let mut out = BTreeMap::new();
        let mut steps = 0usize;
        while let Some((key, c)) = pending.pop_last() {
            let word = key.2;
            match self.find_redex(&word) {
                None => {
                    out.insert(word, c);
                }
                Some((pos, r)) => {
                    steps += 1;
                    if steps > budget {
                        return Err(Error::StepBudgetExhausted(budget));
                    }
                    for (nw, rc) in self.apply_rule(&word, pos, r) {
                        let k = self.order_key(&nw);
                        accumulate(&mut pending, k, &c * &rc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Words rendered with `*` between factors and exponents collapsed: `a^2*b`.
    pub fn word_to_string(&self, w: &[u8]) -> String {
        self.format_word(w, "*", true)
    }

    /// Words rendered with spaces, as in the JSON schema: `a^2 b`.
    pub fn word_to_json(&self, w: &[u8]) -> String {
        self.format_word(w, " ", false)
    }

    fn format_word(&self, w: &[u8], sep: &str, paren_long: bool) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let sym = &self.symbols[w[i] as usize];
            let base = if paren_long && sym.chars().count() > 1 {
                format!("({sym})")
            } else {
                sym.clone()
            };
            if j - i == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{}", j - i));
            }
            i = j;
        }
        parts.join(sep)
    }

    /// Parse the space-separated JSON word form back to a word.
    pub fn word_from_json(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for part in text.split_whitespace() {
            let (sym, pow) = match part.split_once('^') {
                Some((s, p)) => (
                    s,
                    p.parse::<usize>()
                        .map_err(|_| Error::Invalid(format!("bad exponent in `{part}`")))?,
                ),
                None => (part, 1),
            };
            let g = self
                .symbol_index(sym)
                .ok_or_else(|| Error::UnknownSymbol(sym.to_string()))?;
            out.extend(std::iter::repeat_n(g, pow));
        }
        Ok(out)
    }

    /// Whether two handles denote the same presentation.
    pub fn same_as(&self, other: &Presentation) -> bool {
        std::ptr::eq(self, other) || (self.name == other.name && self.symbols == other.symbols)
    }

    /// Copy of this presentation with every coefficient evaluated at `q = 1`.
    pub fn specialize_at_one(&self, name: impl Into<String>) -> Result<Presentation> {
        let mut b = PresentationBuilder::from_symbols(name, self.symbols.clone())
            .lex_ranks(self.lex_ranks.clone());
        if let Some(g) = &self.grading {
            b = b.grading(g.clone());
        }
        if let Some(budget) = self.budget {
            b = b.step_budget(budget);
        }
        for r in &self.rules {
            let rhs = r
                .rhs
                .iter()
                .map(|(w, c)| Ok((w.clone(), QRational::from_rational(c.eval_at_one()?))))
                .collect::<Result<Vec<_>>>()?;
            b = b.rule(r.lhs.clone(), rhs);
        }
        b.build()
    }
}

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, QRational>, key: K, c: QRational) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> Presentation {
        // commutative polynomial ring in x < y
        PresentationBuilder::new("toy", &["x", "y"])
            .rule(vec![1, 0], vec![(vec![0, 1], QRational::one())])
            .build()
            .unwrap()
    }

    #[test]
    fn rejects_increasing_rule() {
        let err = PresentationBuilder::new("bad", &["x", "y"])
            .rule(vec![0, 1], vec![(vec![1, 0], QRational::one())])
            .build();
        assert!(matches!(err, Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn sorts_commutative_words() {
        let p = toy();
        let nf = p.reduce([(vec![1, 1, 0, 1, 0], QRational::one())]).unwrap();
        assert_eq!(nf.len(), 1);
        assert_eq!(nf.get(&vec![0, 0, 1, 1, 1]), Some(&QRational::one()));
    }

    #[test]
    fn budget_is_enforced() {
        let p = PresentationBuilder::new("toy", &["x", "y"])
            .rule(vec![1, 0], vec![(vec![0, 1], QRational::one())])
            .step_budget(3)
            .build()
            .unwrap();
        let r = p.reduce([(vec![1, 1, 1, 0, 0, 0], QRational::one())]);
        assert_eq!(r, Err(Error::StepBudgetExhausted(3)));
    }

    #[test]
    fn word_formats_round_trip() {
        let p = toy();
        let w = vec![0, 0, 1];
        assert_eq!(p.word_to_string(&w), "x^2*y");
        assert_eq!(p.word_to_json(&w), "x^2 y");
        assert_eq!(p.word_from_json("x^2 y").unwrap(), w);
        assert_eq!(p.word_from_json("1").unwrap(), Vec::<u8>::new());
        assert_eq!(p.parse_word("xxy").unwrap(), w);
    }
}
