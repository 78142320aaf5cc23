//! Words in two noncommuting generators.
//!
//! A word is a sequence of generator blocks `(generator, exponent)` with
//! adjacent blocks distinct and no zero exponents, so equality is
//! structural. Exponents are rational: fractional and negative powers of a
//! single generator are meaningful (and needed — relations like
//! `[B, A] = h A^(1/2)` produce them), while the rewriting routines enforce
//! per-relation integrality where the algebra demands it.

use std::fmt;

use crate::scalars::Rat;

/// The two generators. `A` is the one collected on the left in the normal
/// form `A^i B^j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    A,
    B,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::A => Gen::B,
            Gen::B => Gen::A,
        }
    }

    /// Index into a two-letter rendering alphabet.
    pub fn idx(self) -> usize {
        match self {
            Gen::A => 0,
            Gen::B => 1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NCWord {
    blocks: Vec<(Gen, Rat)>,
}

impl NCWord {
    /// The empty word (multiplicative unit).
    pub fn one() -> Self {
        NCWord { blocks: Vec::new() }
    }

    pub fn gen(g: Gen) -> Self {
        NCWord {
            blocks: vec![(g, Rat::one())],
        }
    }

    pub fn gen_pow(g: Gen, e: Rat) -> Self {
        if e.is_zero() {
            NCWord::one()
        } else {
            NCWord { blocks: vec![(g, e)] }
        }
    }

    /// Build from arbitrary blocks, merging adjacent equal generators and
    /// dropping zero exponents (a canceled block may rejoin its neighbours).
    pub fn from_blocks<I: IntoIterator<Item = (Gen, Rat)>>(blocks: I) -> Self {
        let mut out: Vec<(Gen, Rat)> = Vec::new();
        for (g, e) in blocks {
            if e.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += &e;
                    if le.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        // A middle cancellation can expose a new adjacent pair; rebuild once.
        if out
            .windows(2)
            .any(|w| w[0].0 == w[1].0)
        {
            return NCWord::from_blocks(out);
        }
        NCWord { blocks: out }
    }

    /// `A^a B^b`.
    pub fn normal(a: Rat, b: Rat) -> Self {
        NCWord::from_blocks([(Gen::A, a), (Gen::B, b)])
    }

    /// `B^b A^a`.
    pub fn antinormal(b: Rat, a: Rat) -> Self {
        NCWord::from_blocks([(Gen::B, b), (Gen::A, a)])
    }

    pub fn from_letters(letters: &[Gen]) -> Self {
        NCWord::from_blocks(letters.iter().map(|&g| (g, Rat::one())))
    }

    pub fn blocks(&self) -> &[(Gen, Rat)] {
        &self.blocks
    }

    pub fn is_one(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn total_degree(&self) -> Rat {
        let mut d = Rat::zero();
        for (_, e) in &self.blocks {
            d += e;
        }
        d
    }

    pub fn concat(&self, other: &NCWord) -> NCWord {
        NCWord::from_blocks(self.blocks.iter().chain(other.blocks.iter()).cloned())
    }

    /// Normal means every `A` stands left of every `B`: empty, one block,
    /// or an `A`-block followed by a `B`-block.
    pub fn is_normal(&self) -> bool {
        self.normal_exponents().is_some()
    }

    pub fn is_antinormal(&self) -> bool {
        self.antinormal_exponents().is_some()
    }

    /// `(a, b)` such that the word is `A^a B^b`, if it is normal.
    pub fn normal_exponents(&self) -> Option<(Rat, Rat)> {
        match self.blocks.as_slice() {
            [] => Some((Rat::zero(), Rat::zero())),
            [(Gen::A, a)] => Some((a.clone(), Rat::zero())),
            [(Gen::B, b)] => Some((Rat::zero(), b.clone())),
            [(Gen::A, a), (Gen::B, b)] => Some((a.clone(), b.clone())),
            _ => None,
        }
    }

    /// `(b, a)` such that the word is `B^b A^a`, if it is antinormal.
    pub fn antinormal_exponents(&self) -> Option<(Rat, Rat)> {
        match self.blocks.as_slice() {
            [] => Some((Rat::zero(), Rat::zero())),
            [(Gen::A, a)] => Some((Rat::zero(), a.clone())),
            [(Gen::B, b)] => Some((b.clone(), Rat::zero())),
            [(Gen::B, b), (Gen::A, a)] => Some((b.clone(), a.clone())),
            _ => None,
        }
    }

    /// Expand to a letter sequence when every exponent is a positive
    /// integer (the bivariate grade solver works letter by letter).
    pub fn letters(&self) -> Option<Vec<Gen>> {
        let mut out = Vec::new();
        for (g, e) in &self.blocks {
            let n = e.to_i64().filter(|n| *n > 0)?;
            for _ in 0..n {
                out.push(*g);
            }
        }
        Some(out)
    }

    pub fn to_string_with(&self, letters: [char; 2], latex: bool) -> String {
        if self.blocks.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (g, e) in &self.blocks {
            out.push(letters[g.idx()]);
            if e.is_one() {
                continue;
            }
            if latex {
                out.push_str(&format!("^{{{}}}", e.latex()));
            } else if e.is_integer() && !e.is_negative() {
                out.push_str(&format!("^{e}"));
            } else {
                out.push_str(&format!("^({e})"));
            }
        }
        out
    }
}

/// Graded order: total degree first, then a block comparison chosen so
/// that reverse iteration prints polynomials in the conventional way
/// (higher degree first; within a degree, `A`-heavy words first).
impl Ord for NCWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for ((g1, e1), (g2, e2)) in self.blocks.iter().zip(other.blocks.iter()) {
            if g1 != g2 {
                // B-led words sort below A-led words of the same degree.
                return if *g1 == Gen::B {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
            match e1.cmp(e2) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.blocks.len().cmp(&other.blocks.len())
    }
}

impl PartialOrd for NCWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(['A', 'B'], false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(blocks: &[(Gen, i64)]) -> NCWord {
        NCWord::from_blocks(blocks.iter().map(|&(g, e)| (g, Rat::from_int(e))))
    }

    #[test]
    fn canonical_blocks() {
        // Adjacent equal generators merge; zero exponents vanish.
        let x = w(&[(Gen::A, 2), (Gen::A, 1), (Gen::B, 0), (Gen::A, 3)]);
        assert_eq!(x, w(&[(Gen::A, 6)]));
        // Cancellation exposing a mergeable pair: A^2 B B^{-1} A = A^3.
        let y = NCWord::from_blocks([
            (Gen::A, Rat::from_int(2)),
            (Gen::B, Rat::one()),
            (Gen::B, Rat::from_int(-1)),
            (Gen::A, Rat::one()),
        ]);
        assert_eq!(y, w(&[(Gen::A, 3)]));
        assert!(NCWord::normal(Rat::zero(), Rat::zero()).is_one());
    }

    #[test]
    fn normal_recognition() {
        assert!(w(&[(Gen::A, 2), (Gen::B, 1)]).is_normal());
        assert!(w(&[(Gen::B, 3)]).is_normal());
        assert!(!w(&[(Gen::B, 1), (Gen::A, 1)]).is_normal());
        assert!(w(&[(Gen::B, 1), (Gen::A, 1)]).is_antinormal());
        assert_eq!(
            w(&[(Gen::A, 2), (Gen::B, 1)]).normal_exponents(),
            Some((Rat::from_int(2), Rat::one()))
        );
        assert_eq!(
            w(&[(Gen::B, 3)]).antinormal_exponents(),
            Some((Rat::from_int(3), Rat::zero()))
        );
    }

    #[test]
    fn word_order_groups_by_degree() {
        // Within a degree, reverse iteration puts A-heavy words first.
        let mut v = vec![
            w(&[(Gen::B, 3)]),
            w(&[(Gen::A, 3)]),
            w(&[(Gen::A, 1), (Gen::B, 2)]),
            w(&[(Gen::A, 2), (Gen::B, 1)]),
            NCWord::one(),
            w(&[(Gen::A, 1), (Gen::B, 1)]),
        ];
        v.sort();
        v.reverse();
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["A^3", "A^2B", "AB^2", "B^3", "AB", "1"]);
    }

    #[test]
    fn letters_roundtrip() {
        let x = w(&[(Gen::B, 2), (Gen::A, 1), (Gen::B, 1)]);
        let ls = x.letters().unwrap();
        assert_eq!(ls, [Gen::B, Gen::B, Gen::A, Gen::B]);
        assert_eq!(NCWord::from_letters(&ls), x);
        assert_eq!(
            NCWord::gen_pow(Gen::A, Rat::new(1, 2)).letters(),
            None
        );
    }

    #[test]
    fn display() {
        assert_eq!(w(&[(Gen::A, 2), (Gen::B, 1)]).to_string(), "A^2B");
        assert_eq!(NCWord::one().to_string(), "1");
        assert_eq!(
            NCWord::gen_pow(Gen::A, Rat::new(-1, 2)).to_string(),
            "A^(-1/2)"
        );
        assert_eq!(
            w(&[(Gen::A, 1), (Gen::B, 2)]).to_string_with(['C', 'D'], false),
            "CD^2"
        );
    }
}
