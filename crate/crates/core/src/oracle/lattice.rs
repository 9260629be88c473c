use std::collections::HashSet;

use crate::context::Group;
use crate::coxeter::{ComponentType, GeneratorId};
use crate::error::{Error, Result};
use crate::garside::{GroupElement, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Prefix,
    Suffix,
}

const MAX_VISITED: usize = 200_000;

fn word_of(e: &GroupElement) -> Vec<Letter> {
    e.to_letters()
}

fn concat(ctx: &Group, parts: &[&[Letter]]) -> GroupElement {
    let w: Vec<Letter> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    GroupElement::from_letters(ctx, &w)
}

fn inverse_word(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inverted()).collect()
}

fn delta_word(ctx: &Group, k: i64) -> Vec<Letter> {
    word_of(&GroupElement::delta_pow(ctx, k))
}

/// `x ≼ w`, decided by positivity of the concatenation `x^{-1} w`.
fn prefix_test(ctx: &Group, x: &[Letter], w: &[Letter]) -> bool {
    concat(ctx, &[&inverse_word(x), w]).is_positive()
}

/// Largest `p` with `Δ^{-p} u` positive, found by scanning.
fn scan_inf(ctx: &Group, u: &[Letter]) -> i64 {
    let mut p = -(u.len() as i64);
    while concat(ctx, &[&delta_word(ctx, -(p + 1)), u]).is_positive() {
        p += 1;
    }
    p
}

/// Smallest `q` with `u ≼ Δ^q`.
fn scan_sup(ctx: &Group, u: &[Letter]) -> i64 {
    let mut q = u.len() as i64;
    while concat(ctx, &[&inverse_word(u), &delta_word(ctx, q - 1)]).is_positive() {
        q -= 1;
    }
    q
}

fn reversed(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().copied().collect()
}

/// Breadth-first search by letter extension from the identity over the
/// positive elements satisfying `keep`, which must be closed under prefixes.
fn explore<F>(ctx: &Group, keep: F) -> Result<Vec<(GroupElement, Vec<Letter>)>>
where
    F: Fn(&[Letter]) -> bool,
{
    let mut seen = HashSet::new();
    let id = GroupElement::identity(ctx);
    seen.insert(id.clone());
    let mut out = vec![(id, Vec::new())];
    let mut head = 0;
    while head < out.len() {
        let w = out[head].1.clone();
        for s in ctx.spec().generators() {
            let mut w2 = w.clone();
            w2.push(Letter::pos(s));
            if !keep(&w2) {
                continue;
            }
            let e = GroupElement::from_letters(ctx, &w2);
            if seen.insert(e.clone()) {
                out.push((e, w2));
                if out.len() > MAX_VISITED {
                    return Err(Error::BudgetExceeded(format!("more than {MAX_VISITED} elements explored")));
                }
            }
        }
        head += 1;
    }
    Ok(out)
}

/// Picks the longest element and checks that every other candidate lies
/// below it for `below`.
fn unique_top<F>(cands: Vec<(GroupElement, Vec<Letter>)>, below: F) -> Result<Vec<Letter>>
where
    F: Fn(&[Letter], &[Letter]) -> bool,
{
    let n = cands.len();
    let top = cands.iter().max_by_key(|(_, w)| w.len()).ok_or(Error::NoMinimumFound(0))?.1.clone();
    if cands.iter().all(|(_, w)| below(w, &top)) {
        Ok(top)
    } else {
        Err(Error::NoMinimumFound(n))
    }
}

fn meet_prefix_words(ctx: &Group, u: &[Letter], v: &[Letter]) -> Result<GroupElement> {
    let m = scan_inf(ctx, u).min(scan_inf(ctx, v));
    let shift = delta_word(ctx, -m);
    let a: Vec<Letter> = shift.iter().chain(u).copied().collect();
    let b: Vec<Letter> = shift.iter().chain(v).copied().collect();
    let common = explore(ctx, |x| prefix_test(ctx, x, &a) && prefix_test(ctx, x, &b))?;
    let top = unique_top(common, |x, t| prefix_test(ctx, x, t))?;
    Ok(concat(ctx, &[&delta_word(ctx, m), &top]))
}

fn join_prefix_words(ctx: &Group, u: &[Letter], v: &[Letter]) -> Result<GroupElement> {
    let big = scan_sup(ctx, u).max(scan_sup(ctx, v));
    let top = delta_word(ctx, big);
    // complements c with u c ≼ Δ^big; the join is Δ^big c^{-1} for the
    // largest c that is a common suffix of the complements
    let cu: Vec<Letter> = inverse_word(u).into_iter().chain(top.iter().copied()).collect();
    let cv: Vec<Letter> = inverse_word(v).into_iter().chain(top.iter().copied()).collect();
    let rc = reversed(&cu);
    let rv = reversed(&cv);
    // suffixes of cu are reversed prefixes of rev(cu)
    let common = explore(ctx, |x| {
        let rx = reversed(x);
        suffix_test(ctx, &rc, &rx) && suffix_test(ctx, &rv, &rx)
    })?;
    let c = unique_top(common, |x, t| prefix_test(ctx, x, t))?;
    let c = reversed(&c);
    Ok(concat(ctx, &[&top, &inverse_word(&c)]))
}

/// `x` is a suffix of the element whose reversed word is `rw`.
fn suffix_test(ctx: &Group, rw: &[Letter], x: &[Letter]) -> bool {
    let w = reversed(rw);
    concat(ctx, &[&w, &inverse_word(x)]).is_positive()
}

fn rev_element(u: &GroupElement) -> Vec<Letter> {
    reversed(&word_of(u))
}

/// Greatest common prefix (or suffix) by exhaustive search.
pub fn brute_meet(u: &GroupElement, v: &GroupElement, order: Order) -> Result<GroupElement> {
    let ctx = u.context();
    match order {
        Order::Prefix => meet_prefix_words(ctx, &word_of(u), &word_of(v)),
        Order::Suffix => {
            let m = meet_prefix_words(ctx, &rev_element(u), &rev_element(v))?;
            Ok(GroupElement::from_letters(ctx, &rev_element(&m)))
        }
    }
}

/// Least common multiple by exhaustive search below a power of `Δ`.
pub fn brute_join(u: &GroupElement, v: &GroupElement, order: Order) -> Result<GroupElement> {
    let ctx = u.context();
    match order {
        Order::Prefix => join_prefix_words(ctx, &word_of(u), &word_of(v)),
        Order::Suffix => {
            let j = join_prefix_words(ctx, &rev_element(u), &rev_element(v))?;
            Ok(GroupElement::from_letters(ctx, &rev_element(&j)))
        }
    }
}

/// All simple elements, by letter extension from `1` below `Δ`.
pub fn enumerate_simples(ctx: &Group) -> Result<Vec<GroupElement>> {
    if ctx.coxeter_order() > 100_000 {
        return Err(Error::BudgetExceeded(format!("|W| = {} exceeds 10^5", ctx.coxeter_order())));
    }
    let delta = delta_word(ctx, 1);
    Ok(explore(ctx, |x| prefix_test(ctx, x, &delta))?.into_iter().map(|(e, _)| e).collect())
}

/// Left normal form by scanning for the infimum and then repeatedly taking
/// the longest simple prefix.
pub fn brute_normal_form(ctx: &Group, word: &[Letter], simples: &[GroupElement]) -> (i64, Vec<GroupElement>) {
    let p = scan_inf(ctx, word);
    let mut rest: Vec<Letter> = delta_word(ctx, -p).into_iter().chain(word.iter().copied()).collect();
    let mut by_len: Vec<(usize, Vec<Letter>, &GroupElement)> =
        simples.iter().map(|s| (s.positive_length().unwrap(), word_of(s), s)).collect();
    by_len.sort_by(|a, b| b.0.cmp(&a.0));
    let mut factors = Vec::new();
    loop {
        let (len, w, s) = by_len
            .iter()
            .find(|(_, w, _)| prefix_test(ctx, w, &rest))
            .expect("the identity is a prefix");
        if *len == 0 {
            break;
        }
        factors.push((*s).clone());
        rest = inverse_word(w).into_iter().chain(rest).collect();
    }
    (p, factors)
}

/// `(x, y)` with `u = x^{-1} y`: `x` is the shortest positive element with
/// `x u` positive.
pub fn brute_np(u: &GroupElement) -> Result<(GroupElement, GroupElement)> {
    let ctx = u.context();
    let w = word_of(u);
    let k = -scan_inf(ctx, &w).min(0);
    let bound = delta_word(ctx, k);
    let cands = explore(ctx, |x| prefix_test(ctx, x, &bound))?;
    let hits: Vec<_> = cands.into_iter().filter(|(_, x)| concat(ctx, &[x, &w]).is_positive()).collect();
    let best = hits.iter().map(|(_, x)| x.len()).min().ok_or(Error::NoMinimumFound(0))?;
    let minimal: Vec<_> = hits.iter().filter(|(_, x)| x.len() == best).collect();
    if minimal.len() != 1 {
        return Err(Error::NoMinimumFound(minimal.len()));
    }
    let x = minimal[0].1.clone();
    Ok((GroupElement::from_letters(ctx, &x), concat(ctx, &[&x, &w])))
}

/// `(a, b)` with `u = a b^{-1}`: `b` is the shortest positive element with
/// `u b` positive.
pub fn brute_pn(u: &GroupElement) -> Result<(GroupElement, GroupElement)> {
    let ctx = u.context();
    let w = word_of(u);
    let k = -scan_inf(ctx, &w).min(0);
    let bound = delta_word(ctx, k);
    let cands = explore(ctx, |x| prefix_test(ctx, x, &bound))?;
    // right multiplication: candidates are reversed words of suffixes of Δ^k
    let hits: Vec<_> = cands
        .into_iter()
        .map(|(_, x)| reversed(&x))
        .filter(|b| concat(ctx, &[&w, b]).is_positive())
        .collect();
    let best = hits.iter().map(Vec::len).min().ok_or(Error::NoMinimumFound(0))?;
    let minimal: Vec<_> = hits.iter().filter(|b| b.len() == best).collect();
    let distinct: HashSet<GroupElement> = minimal.iter().map(|b| GroupElement::from_letters(ctx, b)).collect();
    if distinct.len() != 1 {
        return Err(Error::NoMinimumFound(distinct.len()));
    }
    let b = minimal[0].clone();
    Ok((concat(ctx, &[&w, &b]), GroupElement::from_letters(ctx, &b)))
}

/// Exponent sum of a signed word; a homomorphism to the integers.
pub fn signed_length(word: &[Letter]) -> i64 {
    word.iter().map(|l| if l.inverse { -1 } else { 1 }).sum()
}

/// Image in the symmetric group `Sym(n+1)` for a group of type `A_n`
/// (generators numbered along the path), as the list of images of
/// `0..=n`. `None` for other types.
pub fn type_a_permutation(ctx: &Group, word: &[Letter]) -> Option<Vec<usize>> {
    let n = ctx.rank();
    let ok = ctx.component_types() == [(ctx.all_generators(), ComponentType::A(n))]
        && (0..n.saturating_sub(1)).all(|i| ctx.spec().m(GeneratorId(i as u8), GeneratorId(i as u8 + 1)) == 3);
    if !ok {
        return None;
    }
    let mut perm: Vec<usize> = (0..=n).collect();
    for l in word {
        let i = l.generator.index();
        perm.swap(i, i + 1);
    }
    Some(perm)
}
