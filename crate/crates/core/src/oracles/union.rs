use crate::graph::StoredGraph;
use crate::stream::VertexId;

/// Vertex-disjoint union; block `i` is shifted past all earlier blocks.
pub fn disjoint_union(graphs: &[StoredGraph]) -> StoredGraph {
    let total = graphs.iter().map(StoredGraph::n).sum();
    let mut out = StoredGraph::new(total);
    let mut offset = 0;
    for g in graphs {
        for (u, v) in g.edges() {
            out.insert_edge_unchecked(u + offset, v + offset);
        }
        offset += g.n() as VertexId;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::longest_path_length;

    #[test]
    fn union_examples() {
        assert_eq!(disjoint_union(&[]), StoredGraph::new(0));
        let k3 = StoredGraph::complete(3);
        let two = disjoint_union(&[k3.clone(), k3]);
        assert_eq!((two.n(), two.edge_count()), (6, 6));
        assert!(two.has_edge(3, 5) && !two.has_edge(2, 3));
        let mixed = disjoint_union(&[StoredGraph::path(2), StoredGraph::complete(3)]);
        assert_eq!(longest_path_length(&mixed).unwrap(), 2);
    }
}
