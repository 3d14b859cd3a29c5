//! Base and strong generating sets via deterministic Schreier-Sims.
//!
//! Used as an order and membership oracle that does not enumerate the group.
//! Base points are chosen greedily as the smallest point moved by a
//! generator, and transversals are explicit maps from orbit points to coset
//! representatives, built by breadth-first search in generator order.

use crate::hyperoct::SignedPermutation;
use crate::perm::Permutation;
use crate::{Error, Result};

#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    // transversal[u - 1] = Some(t) with t(base_point) = u, for u in the orbit
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    strong_generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl Bsgs {
    /// Builds a BSGS for the group generated by `generators`.
    pub fn build(degree: usize, generators: &[Permutation]) -> Result<Bsgs> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }

        let mut bsgs = Bsgs {
            degree,
            strong_generators: Vec::new(),
            levels: Vec::new(),
        };
        let mut base: Vec<usize> = Vec::new();
        for g in generators.iter().filter(|g| !g.is_identity()) {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(first_moved(g));
            }
            bsgs.strong_generators.push(g.clone());
        }
        for &b in &base {
            bsgs.levels.push(Level {
                base_point: b,
                transversal: Vec::new(),
                orbit: Vec::new(),
            });
        }
        for i in 0..bsgs.levels.len() {
            bsgs.recompute_level(i);
        }

        // Every Schreier generator at level i must sift through the levels
        // below it. On failure, add the residue and restart from the level
        // where it was added.
        let mut i = bsgs.levels.len();
        'outer: while i > 0 {
            let level = i - 1;
            let gens = bsgs.level_generators(level);
            let orbit = bsgs.levels[level].orbit.clone();
            for &u in &orbit {
                let t_u = bsgs.levels[level].transversal[u - 1].clone().expect("orbit point");
                for s in &gens {
                    let v = s.apply(u);
                    let t_v = bsgs.levels[level].transversal[v - 1].as_ref().expect("orbit is closed");
                    let schreier = &(&t_u * s) * &t_v.inverse();
                    let (residue, failed_at) = bsgs.sift_from(&schreier, level + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if failed_at == bsgs.levels.len() {
                        bsgs.levels.push(Level {
                            base_point: first_moved(&residue),
                            transversal: Vec::new(),
                            orbit: Vec::new(),
                        });
                    }
                    bsgs.strong_generators.push(residue);
                    for l in level + 1..=failed_at {
                        bsgs.recompute_level(l);
                    }
                    i = failed_at + 1;
                    continue 'outer;
                }
            }
            i -= 1;
        }
        Ok(bsgs)
    }

    /// Strong generators fixing every base point before `level`.
    fn level_generators(&self, level: usize) -> Vec<Permutation> {
        let fixed: Vec<usize> = self.levels[..level].iter().map(|l| l.base_point).collect();
        self.strong_generators
            .iter()
            .filter(|g| fixed.iter().all(|&b| g.apply(b) == b))
            .cloned()
            .collect()
    }

    fn recompute_level(&mut self, level: usize) {
        let gens = self.level_generators(level);
        let b = self.levels[level].base_point;
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[b - 1] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![b];
        let mut head = 0;
        while head < orbit.len() {
            let u = orbit[head];
            head += 1;
            for s in &gens {
                let v = s.apply(u);
                if transversal[v - 1].is_none() {
                    let t_u = transversal[u - 1].as_ref().expect("visited");
                    transversal[v - 1] = Some(t_u * s);
                    orbit.push(v);
                }
            }
        }
        let level = &mut self.levels[level];
        level.transversal = transversal;
        level.orbit = orbit;
    }

    fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut g = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let u = g.apply(level.base_point);
            match &level.transversal[u - 1] {
                Some(t) => g = &g * &t.inverse(),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    /// Strips `g` through the chain; returns the residue and the number of
    /// levels passed. `g` is a member iff the residue is the identity and
    /// every level was passed.
    pub fn sift(&self, g: &Permutation) -> Result<(Permutation, usize)> {
        self.check_degree(g)?;
        Ok(self.sift_from(g, 0))
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        let (residue, level) = self.sift(g)?;
        Ok(level == self.levels.len() && residue.is_identity())
    }

    fn check_degree(&self, g: &Permutation) -> Result<()> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        Ok(())
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_generators
    }

    pub fn orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    /// Coset representative sending the base point of `level` to `point`.
    pub fn representative(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels.get(level)?.transversal.get(point.checked_sub(1)?)?.as_ref()
    }
}

fn first_moved(g: &Permutation) -> usize {
    (1..=g.degree()).find(|&i| g.apply(i) != i).expect("non-identity generator")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSet {
    /// Adjacent transpositions plus a sign flip on strand 1.
    Full,
    /// Adjacent transpositions plus a sign flip on strands 1 and 2.
    Even,
}

pub fn standard_generators(n: usize, which: GeneratorSet) -> Result<Vec<SignedPermutation>> {
    use crate::diagram::EdgeSign::{Negative, Positive};

    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let mut gens: Vec<SignedPermutation> = (1..n)
        .map(|i| {
            let p = Permutation::from_cycles(n, &[[i, i + 1]]).expect("valid transposition");
            SignedPermutation::new(p, vec![Positive; n]).expect("same degree")
        })
        .collect();
    let mut signs = vec![Positive; n];
    signs[0] = Negative;
    if which == GeneratorSet::Even {
        signs[1] = Negative;
    }
    gens.push(SignedPermutation::sign_flips(signs)?);
    Ok(gens)
}

/// BSGS of the image in `S_2n` of the group generated by the standard
/// generators.
pub fn embedded_generated(n: usize, which: GeneratorSet) -> Result<Bsgs> {
    let gens: Vec<Permutation> = standard_generators(n, which)?.iter().map(SignedPermutation::embed).collect();
    Bsgs::build(2 * n, &gens)
}
