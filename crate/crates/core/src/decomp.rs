//! Decompositions into bit-wise adjacent transpositions, i.e. swaps of two
//! letters at Hamming distance one.
//!
//! A transposition `(I,J)` with `k = hamming(I,J)` is rewritten as `2k - 1`
//! adjacent factors by walking from `I` to `J` one bit at a time and
//! conjugating the first step by the rest of the walk. Longer cycles are
//! anchored at a *bit-wise minimal letter*: a letter minimizing the largest
//! Hamming distance to the letters the cycle moves. If that letter belongs to
//! the cycle the anchored decomposition is called internal, otherwise
//! external.

use alloc::vec::Vec;
use core::fmt;

use crate::perm::{anchored_product, check_letter, check_qubits};
use crate::{hamming, Cycle, Error, Letter, Permutation, Result, Transposition, TranspositionProduct};

/// The walk `I^(0) = I, I^(1), ..., I^(k) = J`, flipping the differing bits in
/// increasing index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacentPath {
    pub steps: Vec<Letter>,
    pub flipped_bits: Vec<u32>,
}

pub fn adjacent_path(i: Letter, j: Letter) -> Result<AdjacentPath> {
    if i == j {
        return Err(Error::SameLetters(i.0));
    }
    let diff = i.0 ^ j.0;
    let flipped_bits: Vec<u32> = (0..32).filter(|b| diff >> b & 1 == 1).collect();
    let mut steps = Vec::with_capacity(flipped_bits.len() + 1);
    let mut cur = i.0;
    steps.push(i);
    for &bit in &flipped_bits {
        cur ^= 1 << bit;
        steps.push(Letter(cur));
    }
    Ok(AdjacentPath { steps, flipped_bits })
}

/// `(I,J) = σ⁻¹ · (I^(0),I^(1)) · σ` with `σ = (I^(1),I^(2)) ... (I^(k-1),I^(k))`.
///
/// Always `2·hamming(i,j) - 1` factors, each written as `(I^(l-1),I^(l))`.
pub fn transposition_to_adjacent(n: u32, i: Letter, j: Letter) -> Result<TranspositionProduct> {
    check_letter(i, n)?;
    check_letter(j, n)?;
    let path = adjacent_path(i, j)?;
    let steps = &path.steps;
    let k = steps.len() - 1;
    let mut factors = Vec::with_capacity(2 * k - 1);
    for l in (2..=k).rev() {
        factors.push(Transposition::new(steps[l - 1], steps[l])?);
    }
    factors.push(Transposition::new(steps[0], steps[1])?);
    for l in 2..=k {
        factors.push(Transposition::new(steps[l - 1], steps[l])?);
    }
    TranspositionProduct::from_factors(n, factors)
}

/// Replaces every factor of `product` by its adjacent expansion.
pub fn expand_product(product: &TranspositionProduct) -> TranspositionProduct {
    let n = product.n();
    let mut out = TranspositionProduct::new(n).expect("valid qubit count");
    for t in product.factors() {
        let (a, b) = t.letters();
        let part = transposition_to_adjacent(n, a, b).expect("letters already range-checked");
        out.append(&part).expect("same qubit count");
    }
    out
}

/// Largest Hamming distance from `x` to any of the moved letters `support`.
pub fn distance_to_perm(x: Letter, support: &[Letter]) -> Result<u32> {
    support
        .iter()
        .map(|&s| hamming(x, s))
        .max()
        .ok_or(Error::Identity)
}

/// Result of a minimal-letter scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalLetter {
    pub letter: Letter,
    pub distance: u32,
    pub in_support: bool,
}

/// Σ (2·b(x,s) − 1) over the support. Used to break ties between letters at
/// the same minimal distance.
fn anchored_cost(x: Letter, support: &[Letter]) -> i64 {
    support.iter().map(|&s| 2 * hamming(x, s) as i64 - 1).sum()
}

/// Max distance from `x` to `support`, or `None` once it exceeds `bound`.
fn distance_within(x: Letter, support: &[Letter], bound: u32) -> Option<u32> {
    let mut d = 0;
    for &s in support {
        d = d.max(hamming(x, s));
        if d > bound {
            return None;
        }
    }
    Some(d)
}

/// Scans every letter of `[[2^n]]` for one minimizing [`distance_to_perm`].
///
/// Ties go to the smallest anchored cost Σ(2·b(x,s) − 1), then to the
/// smallest letter.
pub fn bitwise_minimal_letter(n: u32, support: &[Letter]) -> Result<MinimalLetter> {
    check_qubits(n)?;
    if support.is_empty() {
        return Err(Error::Identity);
    }
    for &s in support {
        check_letter(s, n)?;
    }
    let mut best: Option<(u32, i64, Letter)> = None;
    for x in (0..1u32 << n).map(Letter) {
        let bound = best.map_or(u32::MAX, |b| b.0);
        let Some(d) = distance_within(x, support, bound) else {
            continue;
        };
        let cost = anchored_cost(x, support);
        match best {
            Some((bd, bc, _)) if (d, cost) >= (bd, bc) => {}
            _ => best = Some((d, cost, x)),
        }
    }
    let (distance, _, letter) = best.expect("at least one letter scanned");
    Ok(MinimalLetter { letter, distance, in_support: support.contains(&letter) })
}

/// The best letter of the support itself under the same ordering as
/// [`bitwise_minimal_letter`].
fn best_in_support(support: &[Letter]) -> (u32, Letter) {
    support
        .iter()
        .map(|&x| {
            let d = distance_to_perm(x, support).expect("non-empty support");
            (d, anchored_cost(x, support), x)
        })
        .min()
        .map(|(d, _, x)| (d, x))
        .expect("non-empty support")
}

/// `(a,s{m-1}) ... (a,s1)` with the cycle rotated to start at `anchor`, every
/// factor expanded into adjacent transpositions.
pub fn internal_minimal_decomp(n: u32, c: &Cycle, anchor: Letter) -> Result<TranspositionProduct> {
    let letters = c.rotated_to(anchor)?;
    Ok(expand_product(&anchored_product(n, &letters)?))
}

/// `(x,s0)(x,s{m-1}) ... (x,s1)(x,s0)` for a letter `x` outside the cycle,
/// every factor expanded into adjacent transpositions.
pub fn external_minimal_decomp(n: u32, c: &Cycle, x: Letter) -> Result<TranspositionProduct> {
    if c.contains(x) {
        return Err(Error::LetterInCycle(x.0));
    }
    check_letter(x, n)?;
    let letters = c.letters();
    let mut anchored = TranspositionProduct::new(n)?;
    anchored.push(Transposition::new(x, letters[0])?)?;
    for &s in letters[1..].iter().rev() {
        anchored.push(Transposition::new(x, s)?)?;
    }
    anchored.push(Transposition::new(x, letters[0])?)?;
    Ok(expand_product(&anchored))
}

fn internal_len(anchor: Letter, letters: &[Letter]) -> usize {
    letters
        .iter()
        .filter(|&&s| s != anchor)
        .map(|&s| 2 * hamming(anchor, s) as usize - 1)
        .sum()
}

fn external_len(x: Letter, letters: &[Letter]) -> usize {
    let anchored: usize = letters.iter().map(|&s| 2 * hamming(x, s) as usize - 1).sum();
    anchored + 2 * hamming(x, letters[0]) as usize - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Anchor every cycle at its smallest letter.
    Naive,
    /// Anchor every cycle of length > 2 at a bit-wise minimal letter.
    Greedy,
    /// Try every internal anchor and every minimal external letter, keep the
    /// shortest.
    Best,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Naive => "naive",
            Strategy::Greedy => "greedy",
            Strategy::Best => "best",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleMethod {
    /// A 2-cycle expanded as a single transposition.
    Direct,
    Internal,
    External,
}

impl CycleMethod {
    pub fn name(self) -> &'static str {
        match self {
            CycleMethod::Direct => "direct",
            CycleMethod::Internal => "internal",
            CycleMethod::External => "external",
        }
    }
}

impl fmt::Display for CycleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How one cycle was decomposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomp {
    pub cycle: Cycle,
    pub method: CycleMethod,
    /// Anchor for internal decompositions, outside letter for external ones.
    pub anchor: Option<Letter>,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompReport {
    pub strategy: Strategy,
    /// Bit-wise adjacent factors in product order.
    pub factors: TranspositionProduct,
    pub per_cycle: Vec<CycleDecomp>,
}

impl DecompReport {
    pub fn total_length(&self) -> usize {
        self.factors.len()
    }
}

fn decompose_cycle(n: u32, c: &Cycle, strategy: Strategy) -> (CycleDecomp, TranspositionProduct) {
    let letters = c.letters();
    let (method, anchor) = if c.len() == 2 {
        (CycleMethod::Direct, None)
    } else {
        match strategy {
            Strategy::Naive => (CycleMethod::Internal, Some(c.first())),
            Strategy::Greedy => {
                let global = bitwise_minimal_letter(n, letters).expect("cycle letters in range");
                let (d_in, inside) = best_in_support(letters);
                if d_in == global.distance {
                    (CycleMethod::Internal, Some(inside))
                } else {
                    (CycleMethod::External, Some(global.letter))
                }
            }
            Strategy::Best => best_anchor(n, letters),
        }
    };
    let product = match (method, anchor) {
        (CycleMethod::Direct, _) => {
            transposition_to_adjacent(n, letters[0], letters[1]).expect("letters in range")
        }
        (CycleMethod::Internal, Some(a)) => internal_minimal_decomp(n, c, a).expect("anchor in cycle"),
        (CycleMethod::External, Some(x)) => external_minimal_decomp(n, c, x).expect("letter outside cycle"),
        _ => unreachable!(),
    };
    let info = CycleDecomp { cycle: c.clone(), method, anchor, length: product.len() };
    (info, product)
}

fn best_anchor(n: u32, letters: &[Letter]) -> (CycleMethod, Option<Letter>) {
    let (int_len, int_anchor) = letters
        .iter()
        .map(|&a| (internal_len(a, letters), a))
        .min()
        .expect("non-empty cycle");
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    let mut best_ext: Option<(u32, usize, Letter)> = None;
    for x in (0..1u32 << n).map(Letter) {
        if sorted.binary_search(&x).is_ok() {
            continue;
        }
        let bound = best_ext.map_or(u32::MAX, |b| b.0);
        let Some(d) = distance_within(x, letters, bound) else {
            continue;
        };
        let len = external_len(x, letters);
        match best_ext {
            Some((bd, bl, _)) if (d, len) >= (bd, bl) => {}
            _ => best_ext = Some((d, len, x)),
        }
    }
    match best_ext {
        Some((_, ext_len, x)) if ext_len < int_len => (CycleMethod::External, Some(x)),
        _ => (CycleMethod::Internal, Some(int_anchor)),
    }
}

/// Bit-wise adjacent decomposition of `p`, one disjoint cycle at a time in
/// order of smallest letter.
pub fn reduce(p: &Permutation, strategy: Strategy) -> DecompReport {
    let n = p.n();
    let mut factors = TranspositionProduct::new(n).expect("valid qubit count");
    let mut per_cycle = Vec::new();
    for c in p.disjoint_cycles() {
        let (info, product) = decompose_cycle(n, &c, strategy);
        factors.append(&product).expect("same qubit count");
        per_cycle.push(info);
    }
    DecompReport { strategy, factors, per_cycle }
}

/// Naive expansion of a product of (possibly overlapping) cycles exactly as
/// written: each cycle becomes its anchored transpositions, each of which is
/// expanded into adjacent factors.
pub fn reduce_as_written(n: u32, cycles: &[Cycle]) -> Result<DecompReport> {
    let mut factors = TranspositionProduct::new(n)?;
    let mut per_cycle = Vec::new();
    for c in cycles {
        for &l in c.letters() {
            check_letter(l, n)?;
        }
        let (info, product) = decompose_cycle(n, c, Strategy::Naive);
        factors.append(&product)?;
        per_cycle.push(info);
    }
    Ok(DecompReport { strategy: Strategy::Naive, factors, per_cycle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Parity;
    use alloc::vec;

    fn l(v: u32) -> Letter {
        Letter(v)
    }

    fn letters(v: &[u32]) -> Vec<Letter> {
        v.iter().copied().map(Letter).collect()
    }

    fn product(n: u32, pairs: &[(u32, u32)]) -> TranspositionProduct {
        let factors = pairs.iter().map(|&(a, b)| Transposition::new(a, b).unwrap()).collect();
        TranspositionProduct::from_factors(n, factors).unwrap()
    }

    #[test]
    fn path_for_seven_twelve() {
        let path = adjacent_path(l(7), l(12)).unwrap();
        assert_eq!(path.steps, letters(&[7, 6, 4, 12]));
        assert_eq!(path.flipped_bits, vec![0, 1, 3]);
        let path = adjacent_path(l(4), l(7)).unwrap();
        assert_eq!(path.steps, letters(&[4, 5, 7]));
        assert_eq!(path.flipped_bits, vec![0, 1]);
        assert_eq!(adjacent_path(l(4), l(6)).unwrap().steps, letters(&[4, 6]));
        assert_eq!(adjacent_path(l(3), l(3)), Err(Error::SameLetters(3)));
    }

    #[test]
    fn transposition_expansions() {
        let t = transposition_to_adjacent(4, l(7), l(12)).unwrap();
        assert_eq!(t.to_string(), "(4,12)(6,4)(7,6)(6,4)(4,12)");
        assert_eq!(t.evaluate(), Permutation::parse("(7,12)", 4).unwrap());
        assert_eq!(transposition_to_adjacent(3, l(4), l(6)).unwrap().to_string(), "(4,6)");
        assert_eq!(
            transposition_to_adjacent(3, l(4), l(7)).unwrap().to_string(),
            "(5,7)(4,5)(5,7)"
        );
        assert_eq!(
            transposition_to_adjacent(2, l(1), l(4)),
            Err(Error::LetterOutOfRange { letter: 4, n: 2 })
        );
    }

    #[test]
    fn transposition_expansion_exhaustive_four_bits() {
        for i in 0..16 {
            for j in 0..16 {
                if i == j {
                    continue;
                }
                let t = transposition_to_adjacent(4, l(i), l(j)).unwrap();
                assert_eq!(t.len(), 2 * hamming(l(i), l(j)) as usize - 1);
                assert!(t.is_bit_adjacent());
                let tr = Transposition::new(i, j).unwrap();
                assert_eq!(t.evaluate(), Permutation::from_transposition(4, &tr).unwrap());
            }
        }
    }

    #[test]
    fn distances() {
        let p = Permutation::parse("(1,4)(2,8)", 4).unwrap();
        let support: Vec<_> = p.moved_letters().collect();
        assert_eq!(distance_to_perm(l(0), &support), Ok(1));
        let c = Cycle::new([0, 2, 5]).unwrap();
        assert_eq!(distance_to_perm(l(0), c.letters()), Ok(2));
        let c = Cycle::new([3, 9]).unwrap();
        assert_eq!(distance_to_perm(l(3), c.letters()), Ok(hamming(l(3), l(9))));
        assert_eq!(distance_to_perm(l(0), &[]), Err(Error::Identity));
    }

    #[test]
    fn minimal_letters_of_worked_examples() {
        let p = Permutation::parse("(1,4)(2,8)", 4).unwrap();
        let support: Vec<_> = p.moved_letters().collect();
        assert_eq!(
            bitwise_minimal_letter(4, &support),
            Ok(MinimalLetter { letter: l(0), distance: 1, in_support: false })
        );
        // 0 is the unique minimizer
        let minimizers: Vec<_> = (0..16)
            .filter(|&x| distance_to_perm(l(x), &support).unwrap() == 1)
            .collect();
        assert_eq!(minimizers, vec![0]);

        let c = Cycle::new([0, 2, 5]).unwrap();
        assert_eq!(
            bitwise_minimal_letter(3, c.letters()),
            Ok(MinimalLetter { letter: l(0), distance: 2, in_support: true })
        );
        let c = Cycle::new([0, 7, 12]).unwrap();
        assert_eq!(
            bitwise_minimal_letter(4, c.letters()),
            Ok(MinimalLetter { letter: l(4), distance: 2, in_support: false })
        );
        assert_eq!(bitwise_minimal_letter(4, &[]), Err(Error::Identity));
    }

    #[test]
    fn internal_decompositions() {
        let c = Cycle::new([0, 2, 5]).unwrap();
        let d = internal_minimal_decomp(3, &c, l(0)).unwrap();
        assert_eq!(d.to_string(), "(1,5)(0,1)(1,5)(0,2)");

        let c = Cycle::new([2, 3]).unwrap();
        assert_eq!(internal_minimal_decomp(2, &c, l(2)).unwrap().to_string(), "(2,3)");

        let c = Cycle::new([0, 2, 1, 3]).unwrap();
        let d = internal_minimal_decomp(2, &c, l(0)).unwrap();
        assert_eq!(d.to_string(), "(1,3)(0,1)(1,3)(0,1)(0,2)");
        assert_eq!(d.evaluate(), c.to_permutation(2).unwrap());

        // rotation when the anchor is not the first letter
        let c = Cycle::new([0, 7, 12]).unwrap();
        let d = internal_minimal_decomp(4, &c, l(12)).unwrap();
        assert_eq!(d.evaluate(), c.to_permutation(4).unwrap());
        assert_eq!(internal_minimal_decomp(4, &c, l(5)), Err(Error::AnchorNotInCycle(5)));
    }

    #[test]
    fn external_decompositions() {
        let c = Cycle::new([0, 7, 12]).unwrap();
        let d = external_minimal_decomp(4, &c, l(4)).unwrap();
        assert_eq!(d, product(4, &[(0, 4), (4, 12), (5, 7), (4, 5), (5, 7), (4, 0)]));
        assert_eq!(d.evaluate(), c.to_permutation(4).unwrap());

        let c = Cycle::new([1, 4]).unwrap();
        let d = external_minimal_decomp(3, &c, l(0)).unwrap();
        assert_eq!(d, product(3, &[(0, 1), (0, 4), (0, 1)]));
        assert_eq!(d.evaluate(), Permutation::parse("(1,4)", 3).unwrap());

        let c = Cycle::new([2, 7]).unwrap();
        let d = external_minimal_decomp(3, &c, l(3)).unwrap();
        let mut expected = transposition_to_adjacent(3, l(3), l(2)).unwrap();
        expected.append(&transposition_to_adjacent(3, l(3), l(7)).unwrap()).unwrap();
        expected.append(&transposition_to_adjacent(3, l(3), l(2)).unwrap()).unwrap();
        assert_eq!(d, expected);

        assert_eq!(external_minimal_decomp(4, &c, l(7)), Err(Error::LetterInCycle(7)));
    }

    #[test]
    fn reduce_worked_examples() {
        let written = vec![Cycle::new([0, 2]).unwrap(), Cycle::new([2, 5]).unwrap()];
        let naive = reduce_as_written(3, &written).unwrap();
        assert_eq!(naive.factors.to_string(), "(0,2)(1,5)(3,1)(2,3)(3,1)(1,5)");
        assert_eq!(naive.total_length(), 6);

        let sigma = Permutation::parse("(0,2,5)", 3).unwrap();
        let greedy = reduce(&sigma, Strategy::Greedy);
        assert_eq!(greedy.factors.to_string(), "(1,5)(0,1)(1,5)(0,2)");
        assert_eq!(greedy.per_cycle[0].method, CycleMethod::Internal);
        assert_eq!(greedy.per_cycle[0].anchor, Some(l(0)));

        let pi = Permutation::parse("(0,7,12)(4,5)", 4).unwrap();
        let greedy = reduce(&pi, Strategy::Greedy);
        assert_eq!(
            greedy.factors,
            product(4, &[(0, 4), (4, 12), (5, 7), (4, 5), (5, 7), (4, 0), (4, 5)])
        );
        assert_eq!(greedy.per_cycle[0].method, CycleMethod::External);
        assert_eq!(greedy.per_cycle[0].anchor, Some(l(4)));
        assert_eq!(greedy.per_cycle[0].length, 6);
        assert_eq!(greedy.per_cycle[1].method, CycleMethod::Direct);
        assert_eq!(greedy.per_cycle[1].length, 1);

        let naive = reduce(&Permutation::parse("(7,12)", 4).unwrap(), Strategy::Naive);
        assert_eq!(naive.factors.to_string(), "(4,12)(6,4)(7,6)(6,4)(4,12)");
    }

    #[test]
    fn identity_reduces_to_nothing() {
        for s in [Strategy::Naive, Strategy::Greedy, Strategy::Best] {
            let r = reduce(&Permutation::identity(3).unwrap(), s);
            assert!(r.factors.is_empty());
            assert!(r.per_cycle.is_empty());
        }
    }

    #[test]
    fn every_n2_permutation_round_trips() {
        for image in permutations_of(4) {
            let p = Permutation::from_image(2, image).unwrap();
            for s in [Strategy::Naive, Strategy::Greedy, Strategy::Best] {
                let r = reduce(&p, s);
                assert!(r.factors.is_bit_adjacent());
                assert_eq!(r.factors.evaluate(), p);
                assert_eq!(Parity::of_len(r.total_length()), p.parity());
                assert!(r.total_length() <= 3 * 3);
            }
            assert!(reduce(&p, Strategy::Best).total_length() <= reduce(&p, Strategy::Greedy).total_length());
        }
    }

    #[test]
    fn best_handles_full_support_cycle() {
        // every letter moved: no external candidate exists
        let p = Permutation::parse("(0,1,3,2)", 2).unwrap();
        let r = reduce(&p, Strategy::Best);
        assert_eq!(r.per_cycle[0].method, CycleMethod::Internal);
        assert_eq!(r.factors.evaluate(), p);
    }

    fn permutations_of(k: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in permutations_of(k - 1) {
            for pos in 0..=rest.len() {
                let mut v = rest.clone();
                v.insert(pos, k - 1);
                out.push(v);
            }
        }
        out
    }
}
