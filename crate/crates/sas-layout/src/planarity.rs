//! Abstract-graph planarity testing.
//!
//! A graph is planar iff each of its biconnected components is, so edges are
//! first split with Tarjan's lowpoint algorithm; each nontrivial component is
//! then checked by incremental face embedding: start from a cycle, repeatedly
//! locate the fragments of the remaining graph, and lay a path of the most
//! constrained fragment into an admissible face until either everything
//! embeds or some fragment has no face left.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Whether the simple graph on vertices `0..vertex_count` with the given
/// undirected edges admits a plane embedding.
pub fn is_planar_abstract(vertex_count: usize, edges: &[(usize, usize)]) -> bool {
    let mut normalized: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(u, v) in edges {
        if u == v || u >= vertex_count || v >= vertex_count {
            continue;
        }
        normalized.insert((u.min(v), u.max(v)));
    }
    let edges: Vec<(usize, usize)> = normalized.into_iter().collect();
    if vertex_count >= 3 && edges.len() > 3 * vertex_count - 6 {
        return false;
    }
    biconnected_components(vertex_count, &edges)
        .into_iter()
        .all(|comp| component_embeds(&comp))
}

/// Edge lists of the biconnected components (bridges come out as singletons).
fn biconnected_components(
    vertex_count: usize,
    edges: &[(usize, usize)],
) -> Vec<Vec<(usize, usize)>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
    for (idx, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, idx));
        adj[v].push((u, idx));
    }
    let mut disc = vec![usize::MAX; vertex_count];
    let mut low = vec![0usize; vertex_count];
    let mut timer = 0usize;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut used_edge = vec![false; edges.len()];
    let mut components = Vec::new();

    // Iterative DFS: (vertex, parent edge index, next adjacency cursor).
    for root in 0..vertex_count {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&(v, parent_edge, cursor)) = stack.last() {
            if cursor < adj[v].len() {
                stack.last_mut().expect("nonempty stack").2 += 1;
                let (to, eidx) = adj[v][cursor];
                if eidx == parent_edge {
                    continue;
                }
                if !used_edge[eidx] {
                    used_edge[eidx] = true;
                    edge_stack.push(eidx);
                }
                if disc[to] == usize::MAX {
                    disc[to] = timer;
                    low[to] = timer;
                    timer += 1;
                    stack.push((to, eidx, 0));
                } else if disc[to] < low[v] {
                    low[v] = disc[to];
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    if low[v] < low[parent] {
                        low[parent] = low[v];
                    }
                    if low[v] >= disc[parent] {
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(edges[e]);
                            if e == parent_edge {
                                break;
                            }
                        }
                        components.push(comp);
                    }
                }
            }
        }
    }
    components
}

/// Face-embedding check for one biconnected edge set.
fn component_embeds(component: &[(usize, usize)]) -> bool {
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    for &(u, v) in component {
        let next = ids.len();
        ids.entry(u).or_insert(next);
        let next = ids.len();
        ids.entry(v).or_insert(next);
    }
    let n = ids.len();
    let m = component.len();
    if m <= 2 {
        return true;
    }
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    let edges: Vec<(usize, usize)> = component
        .iter()
        .map(|&(u, v)| (ids[&u], ids[&v]))
        .collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }

    let cycle = some_cycle(&edges, &adj);
    let mut in_graph = vec![false; n];
    for &v in &cycle {
        in_graph[v] = true;
    }
    let mut embedded: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        embedded.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while embedded.len() < m {
        let fragments = find_fragments(n, &adj, &in_graph, &embedded);
        if fragments.is_empty() {
            return embedded.len() == m;
        }
        let face_sets: Vec<BTreeSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut chosen: Option<(&Fragment, usize)> = None;
        for frag in &fragments {
            let admissible: Vec<usize> = face_sets
                .iter()
                .enumerate()
                .filter(|(_, fs)| frag.attachments.iter().all(|a| fs.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((frag, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((frag, admissible[0]));
                    }
                }
            }
        }
        let (frag, face_idx) = chosen.expect("nonempty fragment list");
        let path = fragment_path(frag, &adj, &in_graph);
        embed_path(&mut faces, face_idx, &path);
        for w in path.windows(2) {
            embedded.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_graph[v] = true;
        }
    }
    true
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Any cycle: drop one edge, reconnect its endpoints by breadth-first search.
fn some_cycle(edges: &[(usize, usize)], adj: &[Vec<usize>]) -> Vec<usize> {
    let (u0, v0) = edges[0];
    let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
    prev.insert(u0, u0);
    let mut queue = VecDeque::from([u0]);
    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if v == u0 && to == v0 {
                continue;
            }
            if let Entry::Vacant(slot) = prev.entry(to) {
                slot.insert(v);
                queue.push_back(to);
                if to == v0 {
                    let mut cycle = vec![v0];
                    let mut cur = v0;
                    while cur != u0 {
                        cur = prev[&cur];
                        cycle.push(cur);
                    }
                    return cycle;
                }
            }
        }
    }
    unreachable!("biconnected component with three edges contains a cycle")
}

struct Fragment {
    attachments: BTreeSet<usize>,
    inner: BTreeSet<usize>,
    lone_edge: Option<(usize, usize)>,
}

fn find_fragments(
    n: usize,
    adj: &[Vec<usize>],
    in_graph: &[bool],
    embedded: &BTreeSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut fragments = Vec::new();
    for u in 0..n {
        if !in_graph[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_graph[v] && !embedded.contains(&(u, v)) {
                fragments.push(Fragment {
                    attachments: [u, v].into_iter().collect(),
                    inner: BTreeSet::new(),
                    lone_edge: Some((u, v)),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if in_graph[start] || seen[start] {
            continue;
        }
        let mut inner = BTreeSet::new();
        let mut attachments = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            inner.insert(v);
            for &to in &adj[v] {
                if in_graph[to] {
                    attachments.insert(to);
                } else if !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        fragments.push(Fragment { attachments, inner, lone_edge: None });
    }
    fragments
}

/// A path through the fragment between two of its attachment vertices.
fn fragment_path(frag: &Fragment, adj: &[Vec<usize>], in_graph: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = frag.lone_edge {
        return vec![u, v];
    }
    let a = *frag.attachments.iter().next().expect("attachment");
    let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &to in &adj[a] {
        if frag.inner.contains(&to) && !prev.contains_key(&to) {
            prev.insert(to, a);
            queue.push_back(to);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if in_graph[to] && to != a {
                // Reached a second attachment; unwind the path.
                let mut path = vec![to, v];
                let mut cur = v;
                while let Some(&p) = prev.get(&cur) {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return path;
            }
            if frag.inner.contains(&to) && !prev.contains_key(&to) {
                prev.insert(to, v);
                queue.push_back(to);
            }
        }
    }
    unreachable!("fragment in a biconnected component has two attachments")
}

/// Splits `faces[face_idx]` along `path`, whose endpoints lie on the face.
fn embed_path(faces: &mut Vec<Vec<usize>>, face_idx: usize, path: &[usize]) {
    let cycle = faces[face_idx].clone();
    let a = path[0];
    let b = *path.last().expect("nonempty path");
    let ia = cycle.iter().position(|&v| v == a).expect("endpoint on face");
    let ib = cycle.iter().position(|&v| v == b).expect("endpoint on face");
    let k = cycle.len();
    let walk = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(cycle[i]);
            if i == to {
                break;
            }
            i = (i + 1) % k;
        }
        out
    };
    let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
    let mut face_one = walk(ia, ib);
    face_one.extend(interior.iter().rev());
    let mut face_two = walk(ib, ia);
    face_two.extend(interior.iter());
    faces[face_idx] = face_one;
    faces.push(face_two);
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn complete_bipartite(a: usize, b: usize) -> (usize, Vec<(usize, usize)>) {
        let edges = (0..a).cartesian_product(0..b).map(|(i, j)| (i, a + j)).collect();
        (a + b, edges)
    }

    fn complete(n: usize) -> (usize, Vec<(usize, usize)>) {
        let edges = (0..n).tuple_combinations().collect();
        (n, edges)
    }

    #[test]
    fn small_complete_graphs() {
        for n in 1..=4 {
            let (v, e) = complete(n);
            assert!(is_planar_abstract(v, &e), "K_{n} is planar");
        }
        let (v, e) = complete(5);
        assert!(!is_planar_abstract(v, &e));
        let (v, e) = complete(6);
        assert!(!is_planar_abstract(v, &e));
    }

    #[test]
    fn bipartite_threshold() {
        let (v, e) = complete_bipartite(2, 50);
        assert!(is_planar_abstract(v, &e));
        let (v, e) = complete_bipartite(3, 3);
        assert!(!is_planar_abstract(v, &e));
        let (v, e) = complete_bipartite(2, 2);
        assert!(is_planar_abstract(v, &e));
        let (v, e) = complete_bipartite(4, 4);
        assert!(!is_planar_abstract(v, &e));
    }

    #[test]
    fn petersen_graph_is_not_planar() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        assert!(!is_planar_abstract(10, &edges));
    }

    #[test]
    fn trees_cycles_and_grids_are_planar() {
        let star: Vec<_> = (1..40).map(|i| (0, i)).collect();
        assert!(is_planar_abstract(40, &star));

        let cycle: Vec<_> = (0..30).map(|i| (i, (i + 1) % 30)).collect();
        assert!(is_planar_abstract(30, &cycle));

        let idx = |r: usize, c: usize| r * 6 + c;
        let mut grid = Vec::new();
        for r in 0..5 {
            for c in 0..6 {
                if c + 1 < 6 {
                    grid.push((idx(r, c), idx(r, c + 1)));
                }
                if r + 1 < 5 {
                    grid.push((idx(r, c), idx(r + 1, c)));
                }
            }
        }
        assert!(is_planar_abstract(30, &grid));
    }

    #[test]
    fn disconnected_and_bridged_graphs() {
        // Two K4 blocks joined by a bridge, plus an isolated vertex.
        let mut edges: Vec<(usize, usize)> = (0..4).tuple_combinations().collect_vec();
        edges.extend((4..8).tuple_combinations::<(_, _)>());
        edges.push((3, 4));
        assert!(is_planar_abstract(9, &edges));

        // Gluing K5 behind a bridge keeps the whole graph nonplanar.
        let mut edges: Vec<(usize, usize)> = (0..5).tuple_combinations().collect_vec();
        edges.push((4, 5));
        assert!(!is_planar_abstract(6, &edges));
    }

    #[test]
    fn dense_planar_triangulation_passes_the_edge_bound() {
        // Octahedron: 6 vertices, 12 edges, exactly 3v - 6.
        let edges = vec![
            (0, 1), (0, 2), (0, 3), (0, 4),
            (1, 2), (2, 3), (3, 4), (4, 1),
            (5, 1), (5, 2), (5, 3), (5, 4),
        ];
        assert!(is_planar_abstract(6, &edges));
    }

    #[test]
    fn k5_minus_an_edge_is_planar() {
        let (v, mut e) = complete(5);
        e.retain(|&(u, w)| !(u == 0 && w == 1));
        assert!(is_planar_abstract(v, &e));
    }
}
