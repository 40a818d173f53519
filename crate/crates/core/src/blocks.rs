//! Block (biconnected component) decomposition.

use crate::graph::SignedGraph;

/// Blocks and cutpoints of a connected graph.
///
/// Each block is a sorted vertex list; blocks are ordered by their smallest
/// vertex, ties broken lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cutpoints: Vec<usize>,
}

impl BlockDecomposition {
    /// Every block as an induced signed subgraph, in block order.
    ///
    /// All edges between two vertices of a block belong to that block, so the
    /// induced subgraph is exactly the block.
    pub fn subgraphs(&self, g: &SignedGraph) -> Vec<SignedGraph> {
        self.blocks
            .iter()
            .map(|b| g.induced(b).expect("blocks are connected"))
            .collect()
    }
}

/// Hopcroft–Tarjan biconnected components with an explicit DFS stack.
pub fn blocks(g: &SignedGraph) -> BlockDecomposition {
    let n = g.order();
    if n == 1 {
        return BlockDecomposition {
            blocks: vec![vec![0]],
            cutpoints: Vec::new(),
        };
    }

    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut time = 0;

    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, UNSET, 0)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    let mut root_children = 0;

    while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
        let nbrs = g.neighbors(v);
        if *next < nbrs.len() {
            let w = nbrs[*next].0;
            *next += 1;
            if disc[w] == UNSET {
                edge_stack.push((v, w));
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent == UNSET {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != 0 {
                    is_cut[parent] = true;
                }
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                found.push(block);
            }
        }
    }
    if root_children > 1 {
        is_cut[0] = true;
    }

    found.sort();
    BlockDecomposition {
        blocks: found,
        cutpoints: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}
