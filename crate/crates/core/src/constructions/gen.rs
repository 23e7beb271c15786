//! Parameterized tree families and seeded random trees.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// The path on `n` vertices, numbered along the path.
pub fn path(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    Tree::new(n, (0..n - 1).map(|i| (i, i + 1)))
}

/// The star with `leaves` leaves around centre 0.
pub fn star(leaves: usize) -> Result<Tree> {
    Tree::new(leaves + 1, (0..leaves).map(|i| (0, i + 1)))
}

/// Paths of the given lengths joined at centre 0; an empty list gives the
/// single vertex.  Legs are numbered consecutively, one leg at a time.
pub fn spider(legs: &[usize]) -> Result<Tree> {
    if legs.contains(&0) {
        return Err(Error::BadParams("spider legs must have length at least 1".into()));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::new(next, edges)
}

/// A spine path with `leaf_counts[i]` leaves attached to spine vertex `i`.
/// Spine vertices come first, then the leaves in spine order.
pub fn caterpillar(spine: usize, leaf_counts: &[usize]) -> Result<Tree> {
    if spine == 0 {
        return Err(Error::NoVertices);
    }
    if leaf_counts.len() != spine {
        return Err(Error::BadParams(format!(
            "expected {} leaf counts for a spine of {}, got {}",
            spine,
            spine,
            leaf_counts.len()
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..spine - 1).map(|i| (i, i + 1)).collect();
    let mut next = spine;
    for (i, &count) in leaf_counts.iter().enumerate() {
        for _ in 0..count {
            edges.push((i, next));
            next += 1;
        }
    }
    Tree::new(next, edges)
}

/// A uniformly random labeled tree on `n` vertices, decoded from a random
/// Pruefer sequence drawn from a seeded ChaCha stream.
pub fn random_pruefer(n: usize, seed: u64) -> Result<Tree> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n == 1 {
        return Ok(Tree::single());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(decode_pruefer(n, &seq))
}

fn decode_pruefer(n: usize, seq: &[usize]) -> Tree {
    let mut degree = vec![1usize; n];
    for &c in seq {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let mut rest = leaves.into_iter();
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((u, v));
    Tree::new(n, edges).expect("Pruefer decoding yields a tree")
}
