//! Words over the alphabet {1, 2} and the Young-Fibonacci lattice structure
//! on them: cover relations, the suffix-stripping partial order, ancestor
//! sets, and rank-level enumeration (optionally restricted to at most `K`
//! twos).
//!
//! A word's *rank* is its digit sum, which is the grading of the lattice.
//! The Hasse diagram has upward edges given by two moves: replace the
//! leftmost 1 by a 2, or insert a 1 anywhere left of the leftmost 1 (anywhere
//! at all if the word has no 1). The partial order itself is decided without
//! chains: strip the maximal common suffix of `w` and `v`; then `w <= v`
//! exactly when the stripped `v` keeps at least as many 2s as the stripped
//! `w` keeps digits.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A finite word over {1, 2}. The empty word is written `e` in text form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    /// The empty word ε.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from raw digits, rejecting anything outside {1, 2}.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self, Error> {
        if let Some(&bad) = digits.iter().find(|&&d| d != 1 && d != 2) {
            return Err(Error::InvalidWord(format!("digit {bad} not in {{1,2}}")));
        }
        Ok(Word(digits))
    }

    /// A run of `count` ones followed by `tail`.
    pub fn ones_then(count: usize, tail: &Word) -> Self {
        let mut digits = vec![1u8; count];
        digits.extend_from_slice(&tail.0);
        Word(digits)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Self {
        let mut digits = self.0.clone();
        digits.extend_from_slice(&other.0);
        Word(digits)
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Digit sum; the grading level of the lattice.
    pub fn rank(&self) -> usize {
        self.0.iter().map(|&d| d as usize).sum()
    }

    /// Number of digits.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Number of 2s.
    pub fn twos(&self) -> usize {
        self.0.iter().filter(|&&d| d == 2).count()
    }

    /// First digit and the rest, unless empty.
    pub fn split_first(&self) -> Option<(u8, Word)> {
        self.0.split_first().map(|(&d, rest)| (d, Word(rest.to_vec())))
    }

    /// True when `self` is a suffix of `other`.
    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.len() >= self.0.len() && other.0[other.0.len() - self.0.len()..] == self.0[..]
    }

    /// Index of the leftmost 1, i.e. the length of the leading run of 2s.
    fn leading_twos(&self) -> usize {
        self.0.iter().take_while(|&&d| d == 2).count()
    }

    /// Upward covers in the Hasse diagram: replace the leftmost 1 by a 2,
    /// or insert a 1 at any position within or adjacent to the leading run
    /// of 2s (all `len + 1` positions when the word has no 1).
    pub fn covers_up(&self) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        let lead = self.leading_twos();
        if lead < self.0.len() {
            let mut replaced = self.0.clone();
            replaced[lead] = 2;
            out.insert(Word(replaced));
        }
        for pos in 0..=lead {
            let mut inserted = self.0.clone();
            inserted.insert(pos, 1);
            out.insert(Word(inserted));
        }
        out
    }

    /// Downward covers: the inverses of `covers_up`. A word is covered from
    /// below by turning any 2 of its leading run back into a 1, or by
    /// deleting its first 1.
    pub fn covers_down(&self) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        let lead = self.leading_twos();
        for pos in 0..lead {
            let mut lowered = self.0.clone();
            lowered[pos] = 1;
            out.insert(Word(lowered));
        }
        if lead < self.0.len() {
            let mut removed = self.0.clone();
            removed.remove(lead);
            out.insert(Word(removed));
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for &d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses the text form: `e` for the empty word, otherwise a nonempty
    /// string of `1`/`2` digits. The bare empty string is rejected so that a
    /// missing argument never silently means ε.
    fn from_str(text: &str) -> Result<Self, Error> {
        if text == "e" {
            return Ok(Word::empty());
        }
        if text.is_empty() {
            return Err(Error::InvalidWord(
                "empty string (use \"e\" for the empty word)".into(),
            ));
        }
        let mut digits = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '1' => digits.push(1),
                '2' => digits.push(2),
                other => {
                    return Err(Error::InvalidWord(format!(
                        "unexpected character {other:?} in {text:?}"
                    )))
                }
            }
        }
        Ok(Word(digits))
    }
}

/// The two words left after removing the maximal common suffix of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrippedPair {
    /// `w` with the common suffix removed.
    pub left: Word,
    /// `v` with the common suffix removed.
    pub right: Word,
    /// The removed suffix itself.
    pub suffix: Word,
}

/// Removes the maximal common suffix of `(w, v)`, returning the stripped
/// pair. The stripped words end in different digits, or at least one of
/// them is empty.
pub fn strip_common_suffix(w: &Word, v: &Word) -> StrippedPair {
    let a = w.digits();
    let b = v.digits();
    let mut k = 0;
    while k < a.len() && k < b.len() && a[a.len() - 1 - k] == b[b.len() - 1 - k] {
        k += 1;
    }
    StrippedPair {
        left: Word(a[..a.len() - k].to_vec()),
        right: Word(b[..b.len() - k].to_vec()),
        suffix: Word(a[a.len() - k..].to_vec()),
    }
}

/// The lattice order: `w <= v` iff after maximal common-suffix stripping the
/// remaining part of `v` has at least as many 2s as the remaining part of
/// `w` has digits.
pub fn leq(w: &Word, v: &Word) -> bool {
    let s = strip_common_suffix(w, v);
    s.right.twos() >= s.left.len()
}

/// The reflexive down-set r(v) = { u : u <= v }, computed by structural
/// recursion: r(ε) = {ε}, r(1v) = r(v) ∪ {1v}, and
/// r(2v) = {ε} ∪ 1·r(v) ∪ 2·r(v).
pub fn ancestors(v: &Word) -> BTreeSet<Word> {
    match v.split_first() {
        None => {
            let mut base = BTreeSet::new();
            base.insert(Word::empty());
            base
        }
        Some((1, rest)) => {
            let mut set = ancestors(&rest);
            set.insert(v.clone());
            set
        }
        Some((_, rest)) => {
            let inner = ancestors(&rest);
            let mut set = BTreeSet::new();
            set.insert(Word::empty());
            for u in &inner {
                let mut one = Vec::with_capacity(u.len() + 1);
                one.push(1);
                one.extend_from_slice(u.digits());
                set.insert(Word(one));
                let mut two = Vec::with_capacity(u.len() + 1);
                two.push(2);
                two.extend_from_slice(u.digits());
                set.insert(Word(two));
            }
            set
        }
    }
}

/// All words of digit sum `n` with at most `max_twos` 2s (`None` for
/// unbounded), in lexicographic order of their digit sequences.
pub fn words_of_rank(n: usize, max_twos: Option<usize>) -> Vec<Word> {
    fn go(n: usize, twos_left: Option<usize>, prefix: &mut Vec<u8>, out: &mut Vec<Word>) {
        if n == 0 {
            out.push(Word(prefix.clone()));
            return;
        }
        prefix.push(1);
        go(n - 1, twos_left, prefix, out);
        prefix.pop();
        if n >= 2 && twos_left != Some(0) {
            prefix.push(2);
            go(n - 2, twos_left.map(|k| k - 1), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    go(n, max_twos, &mut prefix, &mut out);
    out
}

/// Whether `v` can index a central measure on paths with at most `k` twos:
/// either ε, or a word starting with 2 whose number of 2s is at most `k`.
pub fn is_valid_tail(v: &Word, k: usize) -> bool {
    v.is_empty() || (v.digits()[0] == 2 && v.twos() <= k)
}
