//! Isomorphism-class generators: connected graphs (n <= 8) and free trees
//! (n <= 16).

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::error::GraphError;
use crate::graph::Graph;

pub const MAX_BUILTIN_CONNECTED: usize = 8;
pub const MAX_TREE_ORDER: usize = 16;

/// One canonical representative of every graph on `n` vertices, connected or
/// not, in ascending order of canonical adjacency rows.
///
/// Each class on `n` vertices arises by attaching a new vertex to some class
/// on `n - 1` vertices, so extending every smaller representative by every
/// neighbourhood and deduplicating canonical forms is complete.
pub fn generate_all_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > MAX_BUILTIN_CONNECTED {
        return Err(GraphError::UnsupportedOrder {
            what: "built-in graph generation",
            n,
            min: 1,
            max: MAX_BUILTIN_CONNECTED,
        });
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 2..=n {
        let children: BTreeSet<Graph> = level
            .par_iter()
            .flat_map_iter(|parent| {
                let mut rows = parent.rows().to_vec();
                rows.push(0);
                let new = m - 1;
                (0u64..1 << new).map(move |nbrs| {
                    let mut rows = rows.clone();
                    rows[new] = nbrs;
                    let mut rest = nbrs;
                    while rest != 0 {
                        let v = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        rows[v] |= 1 << new;
                    }
                    canonical_form(&Graph::from_rows(rows).expect("extension stays simple"))
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = children.into_iter().collect();
    }
    Ok(level)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices. Larger corpora should be read from graph6 files.
pub fn generate_connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > MAX_BUILTIN_CONNECTED {
        return Err(GraphError::UnsupportedOrder {
            what: "built-in connected-graph generation (use graph6 input for larger n)",
            n,
            min: 1,
            max: MAX_BUILTIN_CONNECTED,
        });
    }
    Ok(generate_all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// Free trees on `n` vertices, one per isomorphism class.
///
/// Walks canonical level sequences in the order of Wright, Richmond,
/// Odlyzko and McKay, which emits each free tree exactly once.
pub fn generate_trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(GraphError::UnsupportedOrder {
            what: "tree generation",
            n,
            min: 1,
            max: MAX_TREE_ORDER,
        });
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1)?]);
    }
    let mut out = Vec::new();
    let mut layout: Option<Vec<usize>> = Some((0..=n / 2).chain(1..n.div_ceil(2)).collect());
    while let Some(candidate) = layout {
        let tree = next_tree(candidate);
        out.push(levels_to_graph(&tree)?);
        layout = next_rooted_tree(&tree, None);
    }
    Ok(out)
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = pred.len() - 1;
        while pred[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut one_found = false;
    let mut m = layout.len();
    for (i, &l) in layout.iter().enumerate() {
        if l == 1 {
            if one_found {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

fn next_tree(mut candidate: Vec<usize>) -> Vec<usize> {
    loop {
        let (left, rest) = split_tree(&candidate);
        let left_height = left.iter().copied().max().unwrap_or(0);
        let rest_height = rest.iter().copied().max().unwrap_or(0);
        let mut valid = rest_height >= left_height;
        if valid
            && rest_height == left_height
            && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
        {
            valid = false;
        }
        if valid {
            return candidate;
        }
        let p = left.len();
        let mut fresh = next_rooted_tree(&candidate, Some(p))
            .expect("invalid candidate always has a successor");
        if candidate[p] > 2 {
            let (new_left, _) = split_tree(&fresh);
            let h = new_left.iter().copied().max().unwrap_or(0);
            let len = fresh.len();
            for (k, level) in (1..=h + 1).enumerate() {
                fresh[len - (h + 1) + k] = level;
            }
        }
        candidate = fresh;
    }
}

fn levels_to_graph(layout: &[usize]) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(layout.len())?;
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                g.add_edge(i, j)?;
                break;
            }
        }
        stack.push(i);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    // OEIS A000055, n = 1..=16
    const FREE_TREES: [usize; 16] = [
        1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
    ];

    #[test]
    fn tree_counts() {
        for n in 1..=14 {
            let trees = generate_trees(n).unwrap();
            assert_eq!(trees.len(), FREE_TREES[n - 1], "n = {n}");
            for t in &trees {
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_connected());
            }
        }
    }

    #[test]
    fn tree_range() {
        assert!(generate_trees(0).is_err());
        assert!(generate_trees(17).is_err());
    }

    #[test]
    fn small_connected_counts() {
        // OEIS A001349
        let expected = [1, 1, 2, 6, 21, 112];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(generate_connected_graphs(i + 1).unwrap().len(), e);
        }
        assert!(generate_connected_graphs(9).is_err());
        assert!(generate_connected_graphs(0).is_err());
    }

    #[test]
    fn all_graph_counts() {
        // OEIS A000088
        let expected = [1, 2, 4, 11, 34, 156];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(generate_all_graphs(i + 1).unwrap().len(), e);
        }
    }
}
