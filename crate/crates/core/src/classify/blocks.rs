//! Block partition read off from the coupling pattern of a system.

use num_traits::Zero;

use crate::system::MatrixSystem;

/// Connected components of the graph on `0..r` with an edge `p - q`
/// whenever some `C_i` or `B^a` has a nonzero `(p, q)` or `(q, p)` entry.
/// Blocks are sorted internally and by their smallest index.
pub fn block_decompose(sys: &MatrixSystem) -> Vec<Vec<usize>> {
    let r = sys.r();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for m in sys.c().iter().chain(sys.b()) {
        for p in 0..r {
            for q in p + 1..r {
                if !m.get(p, q).is_zero() || !m.get(q, p).is_zero() {
                    let (a, b) = (find(&mut parent, p), find(&mut parent, q));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_of_block: Vec<usize> = Vec::new();
    for p in 0..r {
        let root = find(&mut parent, p);
        match root_of_block.iter().position(|&x| x == root) {
            Some(k) => blocks[k].push(p),
            None => {
                root_of_block.push(root);
                blocks.push(vec![p]);
            }
        }
    }
    blocks
}

/// Block sizes in partition order.
pub fn block_sizes(blocks: &[Vec<usize>]) -> Vec<usize> {
    blocks.iter().map(Vec::len).collect()
}
