use std::collections::HashSet;

use rayon::prelude::*;

use crate::context::Group;
use crate::error::{Error, Result};
use crate::garside::{GroupElement, Letter};

/// Every element expressible as a signed word of length at most `radius`,
/// with one shortest representative word each.
#[derive(Clone, Debug)]
pub struct Ball {
    pub radius: usize,
    pub elements: Vec<GroupElement>,
    pub words: Vec<Vec<Letter>>,
}

const MAX_BALL: usize = 2_000_000;

impl Ball {
    pub fn new(ctx: &Group, radius: usize) -> Result<Self> {
        Self::build(ctx, radius, true)
    }

    /// The positive part: elements given by positive words of length at most `radius`.
    pub fn positive(ctx: &Group, radius: usize) -> Result<Self> {
        Self::build(ctx, radius, false)
    }

    fn build(ctx: &Group, radius: usize, signed: bool) -> Result<Self> {
        let mut letters: Vec<Letter> = ctx.spec().generators().map(Letter::pos).collect();
        if signed {
            letters.extend(ctx.spec().generators().map(Letter::neg));
        }
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let id = GroupElement::identity(ctx);
        seen.insert(id.clone());
        let mut elements = vec![id];
        let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
        let mut frontier = vec![0usize];
        for _ in 0..radius {
            let words_ref = &words;
            let letters_ref = &letters;
            let candidates: Vec<(GroupElement, Vec<Letter>)> = frontier
                .par_iter()
                .flat_map_iter(|&i| {
                    letters_ref.iter().map(move |&l| {
                        let mut w = words_ref[i].clone();
                        w.push(l);
                        (GroupElement::from_letters(ctx, &w), w)
                    })
                })
                .collect();
            let mut next = Vec::new();
            for (e, w) in candidates {
                if seen.insert(e.clone()) {
                    next.push(elements.len());
                    elements.push(e);
                    words.push(w);
                }
            }
            if elements.len() > MAX_BALL {
                return Err(Error::BudgetExceeded(format!("ball of radius {radius} has more than {MAX_BALL} elements")));
            }
            frontier = next;
        }
        Ok(Ball { radius, elements, words })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, &Vec<Letter>)> {
        self.elements.iter().zip(self.words.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::group;

    #[test]
    fn small_ball_sizes() {
        let a1 = group("A1").unwrap();
        assert_eq!(Ball::new(&a1, 3).unwrap().len(), 7);
        let a1a1 = group("A1xA1").unwrap();
        // Z^2: points with |x| + |y| <= 2
        assert_eq!(Ball::new(&a1a1, 2).unwrap().len(), 13);
        let a2 = group("A2").unwrap();
        let b = Ball::new(&a2, 2).unwrap();
        assert_eq!(b.len(), 1 + 4 + 12);
        let pos = Ball::positive(&a2, 3).unwrap();
        // positive words of length 3 in A2: 8 words, s1s2s1 = s2s1s2
        assert_eq!(pos.len(), 1 + 2 + 4 + 7);
    }
}
