use super::{Graph, VertexSet};

/// Whether `pattern` is a (not necessarily induced) subgraph of `host`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_subgraph(host, pattern).is_some()
}

/// An embedding of `pattern` into `host`: entry `i` is the host vertex that
/// pattern vertex `i` maps to.
///
/// Backtracks over injective vertex maps. Pattern vertices are placed so that
/// each one has as many already-placed neighbours as possible; a host vertex is
/// a candidate only if its degree is large enough and it is adjacent to the
/// images of every placed neighbour.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let (n, k) = (host.n(), pattern.n());
    if k > n || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if k == 0 {
        return Some(vec![]);
    }

    let order = placement_order(pattern);
    let pos: Vec<usize> = {
        let mut pos = vec![0; k];
        for (i, &h) in order.iter().enumerate() {
            pos[h] = i;
        }
        pos
    };
    let placed_neighbours: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &h)| {
            pattern
                .neighbors(h)
                .iter()
                .filter(|&x| pos[x] < i)
                .map(|x| pos[x])
                .collect()
        })
        .collect();

    let host_deg = host.degrees();
    let degree_ok: Vec<VertexSet> = order
        .iter()
        .map(|&h| {
            let need = pattern.degree(h);
            VertexSet::from_vertices(n, (0..n).filter(|&g| host_deg[g] >= need))
        })
        .collect();

    let mut image = vec![usize::MAX; k];
    let mut used = VertexSet::empty(n);
    if !extend(
        host,
        &placed_neighbours,
        &degree_ok,
        0,
        &mut image,
        &mut used,
    ) {
        return None;
    }
    // image is indexed by placement position
    let mut embedding = vec![0; k];
    for (i, &h) in order.iter().enumerate() {
        embedding[h] = image[i];
    }
    Some(embedding)
}

fn extend(
    host: &Graph,
    placed_neighbours: &[Vec<usize>],
    degree_ok: &[VertexSet],
    depth: usize,
    image: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == image.len() {
        return true;
    }
    let mut cand = degree_ok[depth].clone();
    cand.difference_with(used.words());
    for &p in &placed_neighbours[depth] {
        cand.intersect_with(host.row(image[p]));
    }
    while let Some(g) = cand.pop_first() {
        image[depth] = g;
        used.insert(g);
        if extend(host, placed_neighbours, degree_ok, depth + 1, image, used) {
            return true;
        }
        used.remove(g);
    }
    false
}

/// Greedy order: highest degree first, then repeatedly the vertex with the
/// most placed neighbours (ties by degree, then index).
fn placement_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.n();
    let deg = pattern.degrees();
    let mut placed = vec![false; k];
    let mut links = vec![0usize; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], deg[v], std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
        for u in pattern.neighbors(next).iter() {
            links[u] += 1;
        }
    }
    order
}
