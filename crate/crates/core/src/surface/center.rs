//! Central elements of irreducible spherical subgroups and their action on
//! homology.

use serde::{Deserialize, Serialize};

use super::curves::{gamma_t, twist_h1, twist_power_h1};
use super::{CurveSystem, SurfaceError};
use crate::diagram::{bits, CoxeterDiagram, Subset};
use crate::linalg::{integral, least_squares, IntMatrix};
use crate::spherical::is_spherical_mask;
use crate::spherical::oracle::{is_central_longest, longest_word};

/// Generator `z_T` of the center of `A_T` as a positive word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterWord {
    pub subset: Subset,
    /// Reduced word for the longest element `w0` of `W_T`.
    pub longest: Vec<String>,
    pub longest_is_central: bool,
    /// `Delta` if `w0` is central, else `Delta^2`.
    pub word: Vec<String>,
}

pub fn center_word(d: &CoxeterDiagram, t: &Subset) -> Result<CenterWord, SurfaceError> {
    let mask = d.mask_of(t)?;
    if mask == 0 || !d.is_connected_mask(mask) || !is_spherical_mask(d, mask) {
        return Err(SurfaceError::NotIrreducibleSpherical(t.clone()));
    }
    let gens: Vec<usize> = bits(mask).collect();
    let (longest, central) = match gens.as_slice() {
        [s] => (vec![*s], true),
        [s, u] => {
            // Dihedral: w0 alternates m letters and is central iff m is even.
            let m = d.label(*s, *u).finite().expect("spherical label") as usize;
            (
                (0..m).map(|k| if k % 2 == 0 { *s } else { *u }).collect(),
                m.is_multiple_of(2),
            )
        }
        _ => {
            let w = longest_word(d, mask)?;
            let central = is_central_longest(d, mask, &w)?;
            (w, central)
        }
    };
    let longest: Vec<String> = longest.iter().map(|&i| d.name(i).to_string()).collect();
    let word = if central {
        longest.clone()
    } else {
        [longest.clone(), longest.clone()].concat()
    };
    Ok(CenterWord {
        subset: t.clone(),
        longest,
        longest_is_central: central,
        word,
    })
}

/// Action of a positive word on homology, letters composed left to right.
pub fn word_h1(cs: &CurveSystem, word: &[String]) -> Result<IntMatrix, SurfaceError> {
    let mut acc = IntMatrix::identity(cs.homology().rank());
    for letter in word {
        let s = cs
            .diagram()
            .index_of(letter)
            .ok_or_else(|| crate::diagram::DiagramError::UnknownGenerator(letter.clone()))?;
        acc = &acc * &twist_h1(cs, &cs.core_class(s));
    }
    Ok(acc)
}

/// `rho(z_T^power)` on homology.
pub fn center_power_h1(cs: &CurveSystem, t: &Subset, power: u32) -> Result<IntMatrix, SurfaceError> {
    cs.irreducible_spherical_mask(t)?;
    let z = center_word(cs.diagram(), t)?;
    Ok(word_h1(cs, &z.word)?.pow(power))
}

/// `rho(z_T^2)` on homology.
pub fn center_h1(cs: &CurveSystem, t: &Subset) -> Result<IntMatrix, SurfaceError> {
    center_power_h1(cs, t, 2)
}

/// Components of `Gamma_T` sharing a homology class up to sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelGroup {
    pub components: Vec<String>,
    pub class: Vec<i64>,
    /// Solved exponent; `None` for null-homologous groups, which act trivially.
    pub exponent: Option<i64>,
}

/// Whether `rho(z_T^power)` equals a multitwist about `Gamma_T` on homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultitwistMatch {
    pub subset: Subset,
    pub power: u32,
    pub groups: Vec<ParallelGroup>,
    pub matches: bool,
}

fn normalise(class: &[i64]) -> Vec<i64> {
    match class.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => class.iter().map(|v| -v).collect(),
        _ => class.to_vec(),
    }
}

pub fn multitwist_match(cs: &CurveSystem, t: &Subset, power: u32) -> Result<MultitwistMatch, SurfaceError> {
    let target = center_power_h1(cs, t, power)?;
    let boundary = gamma_t(cs, t)?;
    let mut groups: Vec<ParallelGroup> = Vec::new();
    for c in &boundary.components {
        let key = normalise(&c.class);
        match groups.iter_mut().find(|g| g.class == key) {
            Some(g) => g.components.push(c.name.clone()),
            None => groups.push(ParallelGroup {
                components: vec![c.name.clone()],
                class: key,
                exponent: None,
            }),
        }
    }

    let live: Vec<usize> = (0..groups.len())
        .filter(|&i| groups[i].class.iter().any(|&x| x != 0))
        .collect();
    let h = cs.homology();
    let columns: Vec<Vec<i64>> = live
        .iter()
        .map(|&i| {
            let g = &groups[i].class;
            IntMatrix::outer(g, &h.pairing().apply(g)).entries().to_vec()
        })
        .collect();
    let rhs = target.sub(&IntMatrix::identity(h.rank()));
    let solution = integral(&least_squares(&columns, rhs.entries()));

    let matches = match solution {
        Some(exps) => {
            for (&i, &e) in live.iter().zip(&exps) {
                groups[i].exponent = Some(e);
            }
            let product = live
                .iter()
                .zip(&exps)
                .fold(IntMatrix::identity(h.rank()), |acc, (&i, &e)| {
                    &acc * &twist_power_h1(cs, &groups[i].class, e)
                });
            product == target
        }
        None => false,
    };
    Ok(MultitwistMatch {
        subset: t.clone(),
        power,
        groups,
        matches,
    })
}
