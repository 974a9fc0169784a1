use std::fmt;

use crate::cobweight::{mat_inv, mat_mul, Mat2, IDENTITY, S_GEN, T_GEN};
use crate::error::{Error, Result};

/// Generators of `SL_2(Z)` used in words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    S,
    T,
    TInv,
}

impl Gen {
    pub fn matrix(self) -> Mat2 {
        match self {
            Gen::S => S_GEN,
            Gen::T => T_GEN,
            Gen::TInv => mat_inv(&T_GEN),
        }
    }

    fn letter(self) -> char {
        match self {
            Gen::S => 'S',
            Gen::T => 'T',
            Gen::TInv => 't',
        }
    }
}

/// A word in `S`, `T` and `t = T^-1`; the matrix is the left-to-right product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn parse(s: &str) -> Result<Word> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != '.' && *c != '*')
            .map(|c| match c {
                'S' | 's' => Ok(Gen::S),
                'T' => Ok(Gen::T),
                't' => Ok(Gen::TInv),
                other => Err(Error::InvalidInput(format!(
                    "word letter {other:?} is not one of S, T, t"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn matrix(&self) -> Mat2 {
        self.0
            .iter()
            .fold(IDENTITY, |acc, g| mat_mul(&acc, &g.matrix()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// A word whose matrix is `m`, built by the Euclidean algorithm.
    pub fn decompose(m: &Mat2) -> Result<Word> {
        if crate::cobweight::det(m) != 1 {
            return Err(Error::InvalidInput(format!("{m:?} is not in SL(2,Z)")));
        }
        let mut out = Vec::new();
        let mut cur = *m;
        while cur[1][0] != 0 {
            let q = cur[0][0].div_euclid(cur[1][0]);
            push_t_power(&mut out, q);
            // cur = T^q S cur'
            let [[a, b], [c, d]] = cur;
            let (a, b) = (a - q * c, b - q * d);
            out.push(Gen::S);
            cur = [[c, d], [-a, -b]];
        }
        let [[a, b], _] = cur;
        if a == 1 {
            push_t_power(&mut out, b);
        } else {
            out.push(Gen::S);
            out.push(Gen::S);
            push_t_power(&mut out, -b);
        }
        let w = Word(out);
        debug_assert_eq!(w.matrix(), *m);
        Ok(w)
    }
}

fn push_t_power(out: &mut Vec<Gen>, k: i64) {
    let g = if k >= 0 { Gen::T } else { Gen::TInv };
    out.extend(std::iter::repeat_n(g, k.unsigned_abs() as usize));
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{}", g.letter())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w = Word::parse("ST t").unwrap();
        assert_eq!(w.0, vec![Gen::S, Gen::T, Gen::TInv]);
        assert_eq!(w.to_string(), "STt");
        assert!(Word::parse("SX").is_err());
        assert_eq!(Word::parse("").unwrap().matrix(), IDENTITY);
    }

    #[test]
    fn relations() {
        let st3 = Word::parse("STSTST").unwrap().matrix();
        assert_eq!(st3, Word::parse("SS").unwrap().matrix());
        assert_eq!(Word::parse("SSSS").unwrap().matrix(), IDENTITY);
    }

    #[test]
    fn decomposition_round_trips() {
        for m in [
            IDENTITY,
            [[-1, 0], [0, -1]],
            [[2, 1], [1, 1]],
            [[5, -3], [7, -4]],
            [[-3, 7], [2, -5]],
            [[1, 0], [-4, 1]],
            [[0, 1], [-1, 0]],
        ] {
            assert_eq!(Word::decompose(&m).unwrap().matrix(), m);
        }
        assert!(Word::decompose(&[[2, 0], [0, 1]]).is_err());
    }
}
