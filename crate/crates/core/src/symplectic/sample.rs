//! Seeded random words in the congruence groups.
//!
//! Generators of `Γ₆^♮`: the three Heisenberg elements `[1,0;0]`, `[0,1;0]`,
//! `[0,0;1]`, their `J₆`-conjugates, `j₁` of the two elementary matrices of
//! `Γ(6)`, and all inverses. A sample is a uniformly random word of the
//! requested length, accepted only if it passes `in_group`; the conjugated
//! group uses the `ν₆`-images of the same words and the bilevel group
//! prepends `ζ` with probability one half.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::groups::{from_integer, heis_t_int, heisenberg_int, in_group, j1_int, nu6, nu6_inv, sp_inverse_int, to_integer};
use super::{GroupId, SymplecticError};
use crate::algebra::Mat4;
use crate::{IntMatrix2, Integer, SpMatrix};

/// Groups `sample_group_element` knows how to sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleGroup {
    GammaNat6,
    GammaNatTilde,
    GammaBil6,
}

impl SampleGroup {
    pub fn from_group(g: GroupId) -> Result<Self, SymplecticError> {
        match g {
            GroupId::GammaNat(6) => Ok(SampleGroup::GammaNat6),
            GroupId::GammaNatTilde => Ok(SampleGroup::GammaNatTilde),
            GroupId::GammaBil(6) => Ok(SampleGroup::GammaBil6),
            other => Err(SymplecticError::UnknownGroup(format!("cannot sample {other}"))),
        }
    }

    fn group(self) -> GroupId {
        match self {
            SampleGroup::GammaNat6 => GroupId::GammaNat(6),
            SampleGroup::GammaNatTilde => GroupId::GammaNatTilde,
            SampleGroup::GammaBil6 => GroupId::GammaBil(6),
        }
    }
}

fn generators() -> Vec<Mat4<Integer>> {
    let i = |v: i64| Integer::from(v);
    let (o, z) = (i(1), i(0));
    let mut gens = Vec::new();
    for (m, n, k) in [(1, 0, 0), (0, 1, 0), (0, 0, 1)] {
        gens.push(heisenberg_int(&i(m), &i(n), &i(k)));
        // J₆[m,n;k]J₆⁻¹ is integral and lies in Γ₆^♮
        let t = from_integer(&heis_t_int(&i(m), &i(n), &i(k)));
        gens.push(to_integer(&nu6_inv(&t)).expect("integral conjugate"));
    }
    gens.push(j1_int(&IntMatrix2::new(o.clone(), i(6), z.clone(), o.clone())));
    gens.push(j1_int(&IntMatrix2::new(o.clone(), z, i(6), o)));
    let inv: Vec<_> = gens.iter().map(sp_inverse_int).collect();
    gens.extend(inv);
    gens
}

/// Random word of length `word_len` in the generators of `Γ₆^♮`.
pub fn sample_gamma_nat<R: Rng>(word_len: usize, rng: &mut R) -> Mat4<Integer> {
    let gens = generators();
    let mut m = Mat4::identity();
    for _ in 0..word_len {
        m = &m * &gens[rng.gen_range(0..gens.len())];
    }
    m
}

const ATTEMPTS: usize = 100;

/// Deterministic under `seed`; every returned matrix passes `in_group`.
pub fn sample_group_element(g: GroupId, word_len: usize, seed: u64) -> Result<SpMatrix, SymplecticError> {
    let which = SampleGroup::from_group(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let base = from_integer(&sample_gamma_nat(word_len, &mut rng));
        let m = match which {
            SampleGroup::GammaNat6 => base,
            SampleGroup::GammaNatTilde => nu6(&base),
            SampleGroup::GammaBil6 => {
                if rng.gen_bool(0.5) {
                    let zeta = super::builtin("ZETA")?;
                    &zeta * &base
                } else {
                    base
                }
            }
        };
        if in_group(&m, which.group())? {
            return Ok(m);
        }
    }
    Err(SymplecticError::SamplingExhausted(ATTEMPTS))
}
