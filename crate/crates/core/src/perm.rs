//! Permutations of the computational basis `[[2^n]]`.
//!
//! Products are written left to right and evaluated right to left: the
//! product `t1 t2 ... tL` maps `x` to `t1(t2(...tL(x)))`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::{Error, Result, MAX_QUBITS};

/// Matrix views are only built for `n` up to this value.
pub const MATRIX_MAX_QUBITS: u32 = 6;

/// A basis label in `[[2^n]]`. Bit `i` of the value belongs to qubit line `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[repr(transparent)]
pub struct Letter(pub u32);

impl From<u32> for Letter {
    fn from(v: u32) -> Self {
        Letter(v)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Number of bit positions in which `a` and `b` differ.
#[inline]
pub fn hamming(a: Letter, b: Letter) -> u32 {
    (a.0 ^ b.0).count_ones()
}

pub(crate) fn check_qubits(n: u32) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::InvalidQubitCount(n));
    }
    Ok(())
}

pub(crate) fn check_letter(letter: Letter, n: u32) -> Result<()> {
    if (letter.0 as u64) >> n != 0 {
        return Err(Error::LetterOutOfRange { letter: letter.0, n });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_len(len: usize) -> Parity {
        if len.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A swap of two distinct letters.
///
/// The letters keep the orientation they were written in, so `(6,4)` prints
/// as `(6,4)`, but equality, ordering and hashing all treat `(6,4)` and
/// `(4,6)` as the same transposition.
#[derive(Debug, Clone, Copy)]
pub struct Transposition {
    a: Letter,
    b: Letter,
}

impl Transposition {
    pub fn new(a: impl Into<Letter>, b: impl Into<Letter>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a == b {
            return Err(Error::SameLetters(a.0));
        }
        Ok(Transposition { a, b })
    }

    /// Letters in written orientation.
    pub fn letters(&self) -> (Letter, Letter) {
        (self.a, self.b)
    }

    /// Letters with the smaller one first.
    pub fn normalized(&self) -> (Letter, Letter) {
        if self.a < self.b {
            (self.a, self.b)
        } else {
            (self.b, self.a)
        }
    }

    pub fn hamming(&self) -> u32 {
        hamming(self.a, self.b)
    }

    pub fn is_bit_adjacent(&self) -> bool {
        self.hamming() == 1
    }

    pub fn apply(&self, x: Letter) -> Letter {
        if x == self.a {
            self.b
        } else if x == self.b {
            self.a
        } else {
            x
        }
    }

    pub fn contains(&self, x: Letter) -> bool {
        x == self.a || x == self.b
    }
}

impl PartialEq for Transposition {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for Transposition {}

impl Hash for Transposition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized().hash(state);
    }
}

impl PartialOrd for Transposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Transposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.normalized().cmp(&other.normalized())
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A cyclic permutation `s0 -> s1 -> ... -> s{m-1} -> s0`, stored with its
/// smallest letter first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    letters: Vec<Letter>,
}

impl Cycle {
    pub fn new<I, L>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: Into<Letter>,
    {
        let mut letters: Vec<Letter> = letters.into_iter().map(Into::into).collect();
        if letters.len() < 2 {
            return Err(Error::ShortCycle);
        }
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedLetter(w[0].0));
        }
        let min_pos = letters
            .iter()
            .enumerate()
            .min_by_key(|(_, l)| **l)
            .map(|(i, _)| i)
            .unwrap_or(0);
        letters.rotate_left(min_pos);
        Ok(Cycle { letters })
    }

    /// Letters in canonical order, smallest first.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> Letter {
        self.letters[0]
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.letters.contains(&x)
    }

    /// The letter sequence rotated so that `anchor` comes first.
    pub fn rotated_to(&self, anchor: Letter) -> Result<Vec<Letter>> {
        let pos = self
            .letters
            .iter()
            .position(|&l| l == anchor)
            .ok_or(Error::AnchorNotInCycle(anchor.0))?;
        let mut out = self.letters.clone();
        out.rotate_left(pos);
        Ok(out)
    }

    /// Anchored transposition decomposition `(s0,s{m-1}) ... (s0,s2)(s0,s1)`.
    pub fn to_transpositions(&self, n: u32) -> Result<TranspositionProduct> {
        anchored_product(n, &self.letters)
    }

    pub fn to_permutation(&self, n: u32) -> Result<Permutation> {
        let mut p = Permutation::identity(n)?;
        for &l in &self.letters {
            check_letter(l, n)?;
        }
        let m = self.letters.len();
        for i in 0..m {
            p.image[self.letters[i].0 as usize] = self.letters[(i + 1) % m].0;
        }
        Ok(p)
    }
}

/// `(s0,s{m-1}) ... (s0,s1)` for the given letter order.
pub(crate) fn anchored_product(n: u32, letters: &[Letter]) -> Result<TranspositionProduct> {
    let s0 = letters[0];
    let mut prod = TranspositionProduct::new(n)?;
    for &s in letters[1..].iter().rev() {
        prod.push(Transposition::new(s0, s)?)?;
    }
    Ok(prod)
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// An ordered product of transpositions over `[[2^n]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TranspositionProduct {
    n: u32,
    factors: Vec<Transposition>,
}

impl TranspositionProduct {
    pub fn new(n: u32) -> Result<Self> {
        check_qubits(n)?;
        Ok(TranspositionProduct { n, factors: Vec::new() })
    }

    pub fn from_factors(n: u32, factors: Vec<Transposition>) -> Result<Self> {
        let mut prod = TranspositionProduct::new(n)?;
        for t in factors {
            prod.push(t)?;
        }
        Ok(prod)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn factors(&self) -> &[Transposition] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn push(&mut self, t: Transposition) -> Result<()> {
        let (a, b) = t.letters();
        check_letter(a, self.n)?;
        check_letter(b, self.n)?;
        self.factors.push(t);
        Ok(())
    }

    /// Appends `other` to the right of this product.
    pub fn append(&mut self, other: &TranspositionProduct) -> Result<()> {
        if other.n != self.n {
            return Err(Error::QubitCountMismatch(self.n, other.n));
        }
        self.factors.extend_from_slice(&other.factors);
        Ok(())
    }

    pub fn is_bit_adjacent(&self) -> bool {
        self.factors.iter().all(Transposition::is_bit_adjacent)
    }

    /// The permutation this product denotes (rightmost factor applied first).
    pub fn evaluate(&self) -> Permutation {
        let mut image: Vec<u32> = (0..1u32 << self.n).collect();
        // image = t1 ∘ ... ∘ tk; composing on the right swaps entries.
        for t in &self.factors {
            let (a, b) = t.letters();
            image.swap(a.0 as usize, b.0 as usize);
        }
        Permutation { n: self.n, image }
    }
}

impl fmt::Display for TranspositionProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.factors {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// A bijection of `[[2^n]]`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u32,
    image: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Result<Self> {
        check_qubits(n)?;
        Ok(Permutation { n, image: (0..1u32 << n).collect() })
    }

    /// Builds a permutation from `image[c] = π(c)`.
    pub fn from_image(n: u32, image: Vec<u32>) -> Result<Self> {
        check_qubits(n)?;
        let size = 1usize << n;
        if image.len() != size {
            return Err(Error::NotBijection(size));
        }
        let mut seen = vec![false; size];
        for &v in &image {
            check_letter(Letter(v), n)?;
            if core::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::NotBijection(size));
            }
        }
        Ok(Permutation { n, image })
    }

    pub fn from_transposition(n: u32, t: &Transposition) -> Result<Self> {
        TranspositionProduct::from_factors(n, vec![*t]).map(|p| p.evaluate())
    }

    /// Parses cycle notation such as `(0,7,12)(4,5)` or one-line notation
    /// such as `[2,3,1,0]`. Cycle products need not be disjoint and are
    /// evaluated right to left. The empty string is the identity.
    pub fn parse(text: &str, n: u32) -> Result<Self> {
        check_qubits(n)?;
        if text.trim_start().starts_with('[') {
            let image = parse_one_line(text, n)?;
            return Permutation::from_image(n, image);
        }
        let mut p = Permutation::identity(n)?;
        for c in parse_cycles(text, n)? {
            p = p.compose(&c.to_permutation(n)?)?;
        }
        Ok(p)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of letters, `2^n`.
    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn apply(&self, x: Letter) -> Letter {
        Letter(self.image[x.0 as usize])
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Letters `s` with `π(s) != s`, ascending.
    pub fn moved_letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.image
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i as u32 != v)
            .map(|(i, _)| Letter(i as u32))
    }

    /// `self ∘ other`: `other` applies first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n != other.n {
            return Err(Error::QubitCountMismatch(self.n, other.n));
        }
        let image = other.image.iter().map(|&x| self.image[x as usize]).collect();
        Ok(Permutation { n: self.n, image })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u32; self.image.len()];
        for (c, &r) in self.image.iter().enumerate() {
            image[r as usize] = c as u32;
        }
        Permutation { n: self.n, image }
    }

    /// Disjoint cycles of length at least two, each smallest-letter-first,
    /// sorted by their smallest letter.
    pub fn disjoint_cycles(&self) -> Vec<Cycle> {
        let mut seen = vec![false; self.image.len()];
        let mut cycles = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] as usize == start {
                continue;
            }
            let mut letters = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                letters.push(Letter(x as u32));
                x = self.image[x] as usize;
            }
            // `start` is the smallest unvisited letter, hence the smallest in its cycle.
            cycles.push(Cycle { letters });
        }
        cycles
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.disjoint_cycles().iter().map(|c| c.len() - 1).sum();
        Parity::of_len(transpositions)
    }

    /// The `2^n × 2^n` 0/1 matrix with a one at `(π(c), c)` for every column `c`.
    pub fn matrix_view(&self) -> Result<PermutationMatrix> {
        if self.n > MATRIX_MAX_QUBITS {
            return Err(Error::MatrixTooLarge(self.n));
        }
        let size = self.image.len();
        let mut entries = vec![0u8; size * size];
        for (c, &r) in self.image.iter().enumerate() {
            entries[r as usize * size + c] = 1;
        }
        Ok(PermutationMatrix { size, entries })
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.disjoint_cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in &cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Dense row-major 0/1 matrix, for display and small tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationMatrix {
    size: usize,
    entries: Vec<u8>,
}

impl PermutationMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.entries.chunks(self.size)
    }
}

impl fmt::Display for PermutationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

fn syntax(offset: usize, message: &str) -> Error {
    Error::Syntax { offset, message: message.to_string() }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let mut msg = String::from("expected '");
            msg.push(c as char);
            msg.push('\'');
            Err(syntax(self.pos, &msg))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected a letter"));
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| syntax(start, "letter does not fit in 32 bits"))
    }
}

/// Parses a product of cycles as written, keeping their order. One-letter
/// cycles and `()` are accepted and dropped.
pub fn parse_cycles(text: &str, n: u32) -> Result<Vec<Cycle>> {
    check_qubits(n)?;
    let mut sc = Scanner::new(text);
    let mut cycles = Vec::new();
    while sc.peek().is_some() {
        sc.expect(b'(')?;
        let mut letters = Vec::new();
        if sc.peek() != Some(b')') {
            loop {
                let v = sc.number()?;
                check_letter(Letter(v), n)?;
                if letters.contains(&Letter(v)) {
                    return Err(Error::RepeatedLetter(v));
                }
                letters.push(Letter(v));
                match sc.peek() {
                    Some(b',') => sc.pos += 1,
                    Some(b')') => break,
                    _ => return Err(syntax(sc.pos, "expected ',' or ')'")),
                }
            }
        }
        sc.expect(b')')?;
        if letters.len() >= 2 {
            cycles.push(Cycle::new(letters)?);
        }
    }
    Ok(cycles)
}

fn parse_one_line(text: &str, n: u32) -> Result<Vec<u32>> {
    let mut sc = Scanner::new(text);
    sc.expect(b'[')?;
    let mut image = Vec::new();
    if sc.peek() != Some(b']') {
        loop {
            let v = sc.number()?;
            check_letter(Letter(v), n)?;
            image.push(v);
            match sc.peek() {
                Some(b',') => sc.pos += 1,
                Some(b']') => break,
                _ => return Err(syntax(sc.pos, "expected ',' or ']'")),
            }
        }
    }
    sc.expect(b']')?;
    if sc.peek().is_some() {
        return Err(syntax(sc.pos, "trailing input after ']'"));
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str, n: u32) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn parse_cycle_matches_matrix_columns() {
        assert_eq!(perm("(0,2,1,3)", 2).image(), &[2, 3, 1, 0]);
        assert_eq!(perm("", 2).image(), &[0, 1, 2, 3]);
        assert_eq!(perm("  ( 0 , 2 , 1 , 3 ) ", 2), perm("(0,2,1,3)", 2));
        assert_eq!(perm("()", 3), Permutation::identity(3).unwrap());
        assert_eq!(perm("(3)", 2), Permutation::identity(2).unwrap());
    }

    #[test]
    fn non_disjoint_products_evaluate_right_to_left() {
        assert_eq!(perm("(0,2)(2,1)(1,3)", 2), perm("(0,2,1,3)", 2));
        assert_eq!(perm("(0,3)(0,1)(0,2)", 2), perm("(0,2,1,3)", 2));
        assert_eq!(perm("(3,6)(6,5)", 3), perm("(3,6,5)", 3));
    }

    #[test]
    fn one_line_notation() {
        assert_eq!(perm("[2,3,1,0]", 2), perm("(0,2,1,3)", 2));
        assert!(matches!(
            Permutation::parse("[0,0,1,2]", 2),
            Err(Error::NotBijection(4))
        ));
        assert!(matches!(Permutation::parse("[0,1,2]", 2), Err(Error::NotBijection(4))));
        assert!(matches!(Permutation::parse("[0,1,2,3] x", 2), Err(Error::Syntax { .. })));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Permutation::parse("(0,4)", 2),
            Err(Error::LetterOutOfRange { letter: 4, n: 2 })
        );
        assert_eq!(Permutation::parse("(1,2,1)", 2), Err(Error::RepeatedLetter(1)));
        assert!(matches!(Permutation::parse("(1,2", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Permutation::parse("1,2)", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Permutation::parse("(1;2)", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Permutation::parse("(a,2)", 2), Err(Error::Syntax { .. })));
        assert!(matches!(
            Permutation::parse("(99999999999,2)", 2),
            Err(Error::Syntax { .. })
        ));
        assert_eq!(Permutation::parse("", 0), Err(Error::InvalidQubitCount(0)));
        assert_eq!(Permutation::parse("", 25), Err(Error::InvalidQubitCount(25)));
    }

    #[test]
    fn compose_and_inverse() {
        let p = perm("(0,2,1,3)", 2);
        let q = perm("(2,1)(1,3)", 2);
        assert_eq!(perm("(0,2)", 2).compose(&q).unwrap(), p);
        let id = Permutation::identity(2).unwrap();
        assert_eq!(id.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&p.inverse()).unwrap(), id);
        // brute-force inversion of [2,3,1,0]
        let mut inv = [0u32; 4];
        for (c, &r) in [2u32, 3, 1, 0].iter().enumerate() {
            inv[r as usize] = c as u32;
        }
        assert_eq!(inv, [3, 2, 0, 1]);
        assert_eq!(p.inverse().image(), &inv);
        assert_eq!(p.inverse(), perm("(3,1,2,0)", 2));
        assert_eq!(id.inverse(), id);
        let t = perm("(1,2)", 2);
        assert_eq!(t.inverse(), t);
        assert_eq!(
            p.compose(&Permutation::identity(3).unwrap()),
            Err(Error::QubitCountMismatch(2, 3))
        );
    }

    #[test]
    fn cycles_of_worked_examples() {
        let cycles = perm("(0,7,12)(4,5)", 4).disjoint_cycles();
        assert_eq!(cycles, vec![Cycle::new([0, 7, 12]).unwrap(), Cycle::new([4, 5]).unwrap()]);
        assert!(Permutation::identity(3).unwrap().disjoint_cycles().is_empty());
        assert_eq!(
            perm("(0,2)(2,1)(1,3)", 2).disjoint_cycles(),
            vec![Cycle::new([0, 2, 1, 3]).unwrap()]
        );
    }

    #[test]
    fn cycle_canonical_form() {
        let c = Cycle::new([7, 12, 0]).unwrap();
        assert_eq!(c.letters(), &[Letter(0), Letter(7), Letter(12)]);
        assert_eq!(c, Cycle::new([0, 7, 12]).unwrap());
        assert_ne!(c, Cycle::new([0, 12, 7]).unwrap());
        assert_eq!(Cycle::new([3]), Err(Error::ShortCycle));
        assert_eq!(Cycle::new([3, 4, 3]), Err(Error::RepeatedLetter(3)));
        assert_eq!(c.rotated_to(Letter(12)).unwrap(), vec![Letter(12), Letter(0), Letter(7)]);
        assert_eq!(c.rotated_to(Letter(5)), Err(Error::AnchorNotInCycle(5)));
        assert_eq!(c.to_string(), "(0,7,12)");
    }

    #[test]
    fn cycle_to_transpositions_anchors_first_letter() {
        let c = Cycle::new([0, 2, 5]).unwrap();
        assert_eq!(c.to_transpositions(3).unwrap().to_string(), "(0,5)(0,2)");
        let c = Cycle::new([0, 2, 1, 3]).unwrap();
        assert_eq!(c.to_transpositions(2).unwrap().to_string(), "(0,3)(0,1)(0,2)");
        let c = Cycle::new([4, 1]).unwrap();
        assert_eq!(c.to_transpositions(3).unwrap().to_string(), "(1,4)");
    }

    #[test]
    fn parity_from_cycle_structure() {
        assert_eq!(perm("(3,6)", 3).parity(), Parity::Odd);
        assert_eq!(Permutation::identity(3).unwrap().parity(), Parity::Even);
        assert_eq!(perm("(0,7,12)(4,5)", 4).parity(), Parity::Odd);
        assert_eq!(perm("(0,7,12)", 4).parity(), Parity::Even);
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming(Letter(3), Letter(6)), 2);
        assert_eq!(hamming(Letter(5), Letter(5)), 0);
        assert_eq!(hamming(Letter(7), Letter(12)), 3);
    }

    #[test]
    fn hamming_is_a_metric_up_to_four_bits() {
        for a in 0..16 {
            for b in 0..16 {
                let (la, lb) = (Letter(a), Letter(b));
                assert_eq!(hamming(la, lb), hamming(lb, la));
                assert_eq!(hamming(la, lb) == 0, a == b);
                for c in 0..16 {
                    assert!(hamming(la, Letter(c)) <= hamming(la, lb) + hamming(lb, Letter(c)));
                }
            }
        }
    }

    #[test]
    fn matrix_of_four_cycle() {
        let m = perm("(0,2,1,3)", 2).matrix_view().unwrap();
        let expected = [[0, 0, 0, 1], [0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0]];
        for (r, row) in expected.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                assert_eq!(m.get(r, c), v);
            }
        }
        assert_eq!(m.to_string(), "0 0 0 1\n0 0 1 0\n1 0 0 0\n0 1 0 0\n");
        let id = Permutation::identity(2).unwrap().matrix_view().unwrap();
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(id.get(r, c), (r == c) as u8);
            }
        }
        assert_eq!(
            Permutation::identity(7).unwrap().matrix_view(),
            Err(Error::MatrixTooLarge(7))
        );
    }

    #[test]
    fn transposition_orientation_and_equality() {
        let t = Transposition::new(6u32, 4u32).unwrap();
        assert_eq!(t.to_string(), "(6,4)");
        assert_eq!(t, Transposition::new(4u32, 6u32).unwrap());
        assert_eq!(t.normalized(), (Letter(4), Letter(6)));
        assert_eq!(Transposition::new(3u32, 3u32), Err(Error::SameLetters(3)));
        let mut prod = TranspositionProduct::new(2).unwrap();
        assert_eq!(
            prod.push(Transposition::new(1u32, 4u32).unwrap()),
            Err(Error::LetterOutOfRange { letter: 4, n: 2 })
        );
    }

    #[test]
    fn display_roundtrip() {
        let p = perm("(4,5)(12,0,7)", 4);
        assert_eq!(p.to_string(), "(0,7,12)(4,5)");
        assert_eq!(perm(&p.to_string(), 4), p);
        assert_eq!(Permutation::identity(2).unwrap().to_string(), "()");
    }
}
