//! Fill-reducing orderings for the LDLT path: nested dissection for matrices
//! that come from structured grids (where the geometry is known exactly) and
//! reverse Cuthill-McKee as the general-purpose fallback.

/// Nested dissection order for a row-major grid. `dims` lists per axis the
/// node count and whether the axis wraps around. Returns `perm` with
/// `perm[new] = old`; node ids follow the same row-major convention as the
/// assembled operators (first axis major).
#[must_use]
pub fn grid_nd_order(dims: &[(usize, bool)]) -> Vec<usize> {
    match dims {
        [(n, periodic)] => order_1d(*n, *periodic),
        [(nx, px), (ny, py)] => order_2d(*nx, *px, *ny, *py),
        _ => panic!("grids are one- or two-dimensional"),
    }
}

fn order_1d(n: usize, periodic: bool) -> Vec<usize> {
    if periodic && n >= 3 {
        // Cutting node 0 turns the ring into a path, which factors with no
        // fill in natural order; the cut node goes last.
        let mut perm: Vec<usize> = (1..n).collect();
        perm.push(0);
        perm
    } else {
        (0..n).collect()
    }
}

fn order_2d(nx: usize, px: bool, ny: usize, py: bool) -> Vec<usize> {
    let id = |ix: usize, iy: usize| ix * ny + iy;
    let mut perm = Vec::with_capacity(nx * ny);
    let x0 = usize::from(px && nx >= 3);
    let y0 = usize::from(py && ny >= 3);
    rect_nd(x0, nx, y0, ny, ny, &mut perm);
    // Wrap-breaking lines go last: they separate the interior from itself
    // across the periodic seam.
    if y0 == 1 {
        for ix in x0..nx {
            perm.push(id(ix, 0));
        }
    }
    if x0 == 1 {
        for iy in 0..ny {
            perm.push(id(0, iy));
        }
    }
    debug_assert_eq!(perm.len(), nx * ny);
    perm
}

/// Recursive bisection of the open index rectangle [x0, x1) x [y0, y1).
fn rect_nd(x0: usize, x1: usize, y0: usize, y1: usize, ny: usize, out: &mut Vec<usize>) {
    let sx = x1 - x0;
    let sy = y1 - y0;
    if sx == 0 || sy == 0 {
        return;
    }
    if sx * sy <= 64 || sx.max(sy) <= 4 {
        for ix in x0..x1 {
            for iy in y0..y1 {
                out.push(ix * ny + iy);
            }
        }
        return;
    }
    if sx >= sy {
        let mid = x0 + sx / 2;
        rect_nd(x0, mid, y0, y1, ny, out);
        rect_nd(mid + 1, x1, y0, y1, ny, out);
        for iy in y0..y1 {
            out.push(mid * ny + iy);
        }
    } else {
        let mid = y0 + sy / 2;
        rect_nd(x0, x1, y0, mid, ny, out);
        rect_nd(x0, x1, mid + 1, y1, ny, out);
        for ix in x0..x1 {
            out.push(ix * ny + mid);
        }
    }
}

/// Reverse Cuthill-McKee on an undirected adjacency structure.
/// Returns `perm` with `perm[new] = old`.
#[must_use]
pub fn reverse_cuthill_mckee(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::new();
    let mut neighbors = Vec::new();

    for start in 0..n {
        if visited[start] {
            continue;
        }
        let root = pseudo_peripheral(start, adj, &degree);
        visited[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            neighbors.clear();
            neighbors.extend(adj[u].iter().copied().filter(|&v| !visited[v]));
            neighbors.sort_unstable_by_key(|&v| degree[v]);
            for &v in &neighbors {
                visited[v] = true;
                queue.push_back(v);
            }
        }
    }
    order.reverse();
    order
}

/// Two BFS sweeps toward an eccentric low-degree node.
fn pseudo_peripheral(start: usize, adj: &[Vec<usize>], degree: &[usize]) -> usize {
    let mut root = start;
    for _ in 0..2 {
        let levels = bfs_levels(root, adj);
        let far = levels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != usize::MAX)
            .max_by_key(|(v, &l)| (l, std::cmp::Reverse(degree[*v]), std::cmp::Reverse(*v)))
            .map(|(v, _)| v)
            .unwrap_or(root);
        if far == root {
            break;
        }
        root = far;
    }
    root
}

fn bfs_levels(root: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut level = vec![usize::MAX; adj.len()];
    level[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_permutation(perm: &[usize], n: usize) {
        assert_eq!(perm.len(), n);
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "invalid or repeated index {p}");
            seen[p] = true;
        }
    }

    #[test]
    fn grid_orders_are_permutations() {
        for &(nx, px) in &[(1usize, false), (5, false), (5, true), (17, true)] {
            assert_permutation(&grid_nd_order(&[(nx, px)]), nx);
        }
        for &(nx, px, ny, py) in &[
            (4usize, false, 7usize, false),
            (13, true, 13, true),
            (20, true, 9, false),
            (3, false, 30, true),
        ] {
            assert_permutation(&grid_nd_order(&[(nx, px), (ny, py)]), nx * ny);
        }
    }

    #[test]
    fn rcm_is_a_permutation_and_reduces_bandwidth() {
        // Path graph shuffled: RCM should recover a low-bandwidth order.
        let n = 40;
        let mut adj = vec![Vec::new(); n];
        let scramble: Vec<usize> = (0..n).map(|i| (i * 17) % n).collect();
        for w in 0..n - 1 {
            let (a, b) = (scramble[w], scramble[w + 1]);
            adj[a].push(b);
            adj[b].push(a);
        }
        let perm = reverse_cuthill_mckee(&adj);
        assert_permutation(&perm, n);
        let mut inv = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let bw = (0..n)
            .flat_map(|u| adj[u].iter().map(move |&v| inv[u].abs_diff(inv[v])))
            .max()
            .unwrap();
        assert!(bw <= 2, "bandwidth {bw} too large for a path");
    }
}
