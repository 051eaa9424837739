//! Graph storage, random-walk transition matrices and their powers.
//!
//! Graphs are immutable after construction: node ids are reindexed to a
//! contiguous `[0, n)` range, adjacency is stored once, and the weighted
//! degree of every node is precomputed. A [`TransitionMatrix`] holds the
//! row-stochastic one-step walk matrix `T` with `t_ij = w_ij / d_i`, and
//! [`TransitionMatrix::power`] raises it to `T^k` for the regularization
//! layer.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use crate::error::{CoreError, Result};

/// One parsed edge-list record before reindexing.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeInput {
    pub src: String,
    pub dst: String,
    pub weight: f64,
}

impl EdgeInput {
    pub fn new(src: impl Into<String>, dst: impl Into<String>, weight: f64) -> Self {
        EdgeInput { src: src.into(), dst: dst.into(), weight }
    }
}

/// Construction options for [`Graph::build`].
#[derive(Debug, Clone, Copy, Default)]
pub struct GraphOptions {
    /// Treat edges as directed (out-edge normalization in `T`).
    pub directed: bool,
    /// For directed inputs, also add the reverse of every edge. Off by default.
    pub symmetrize: bool,
}

/// An immutable node/edge store with contiguous indices and an external-id map.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    directed: bool,
    edges: Vec<(usize, usize, f64)>,
    /// Out-neighbors for directed graphs; all neighbors for undirected.
    adjacency: Vec<Vec<(usize, f64)>>,
    /// In-neighbors; only populated for directed graphs.
    in_adjacency: Vec<Vec<(usize, f64)>>,
    degrees: Vec<f64>,
    ids: Vec<String>,
    index_of: HashMap<String, usize>,
}

impl Graph {
    /// Build a graph from raw edge records, dropping self-loops and
    /// zero-weight edges. `extra_nodes` declares nodes that must exist even
    /// when no edge touches them.
    pub fn build(
        edges: &[EdgeInput],
        options: GraphOptions,
        extra_nodes: &[String],
    ) -> Result<Graph> {
        fn intern(
            id: &str,
            ids: &mut Vec<String>,
            index_of: &mut HashMap<String, usize>,
        ) -> usize {
            if let Some(&i) = index_of.get(id) {
                return i;
            }
            let i = ids.len();
            ids.push(id.to_string());
            index_of.insert(id.to_string(), i);
            i
        }

        let mut ids: Vec<String> = Vec::new();
        let mut index_of: HashMap<String, usize> = HashMap::new();
        for id in extra_nodes {
            intern(id, &mut ids, &mut index_of);
        }

        let mut resolved: Vec<(usize, usize, f64)> = Vec::with_capacity(edges.len());
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        for e in edges {
            if !e.weight.is_finite() {
                return Err(CoreError::NonFiniteWeight { src: e.src.clone(), dst: e.dst.clone() });
            }
            if e.weight < 0.0 {
                return Err(CoreError::NegativeWeight {
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                    weight: e.weight,
                });
            }
            let s = intern(&e.src, &mut ids, &mut index_of);
            let d = intern(&e.dst, &mut ids, &mut index_of);
            if s == d || e.weight == 0.0 {
                // Self-loops would let a node transmit its own embedding;
                // zero-weight edges carry no transition mass.
                continue;
            }
            let key = if options.directed { (s, d) } else { (s.min(d), s.max(d)) };
            if seen.insert(key, ()).is_some() {
                return Err(CoreError::DuplicateEdge { src: e.src.clone(), dst: e.dst.clone() });
            }
            resolved.push((s, d, e.weight));
            if options.directed && options.symmetrize {
                // Reverse edge may already exist in the input.
                let rev = (d, s);
                if !seen.contains_key(&rev) {
                    seen.insert(rev, ());
                    resolved.push((d, s, e.weight));
                }
            }
        }

        let n = ids.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut in_adjacency = vec![Vec::new(); if options.directed { n } else { 0 }];
        let mut degrees = vec![0.0; n];
        for &(s, d, w) in &resolved {
            adjacency[s].push((d, w));
            degrees[s] += w;
            if options.directed {
                in_adjacency[d].push((s, w));
            } else {
                adjacency[d].push((s, w));
                degrees[d] += w;
            }
        }

        Ok(Graph {
            n,
            directed: options.directed,
            edges: resolved,
            adjacency,
            in_adjacency,
            degrees,
            ids,
            index_of,
        })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Stored edges, one entry per undirected edge.
    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// Out-neighbors (all neighbors for undirected graphs).
    pub fn neighbors(&self, node: usize) -> &[(usize, f64)] {
        &self.adjacency[node]
    }

    /// Weighted degree `d_i = sum_j w_ij` (out-degree for directed graphs).
    pub fn degree(&self, node: usize) -> f64 {
        self.degrees[node]
    }

    pub fn node_id(&self, node: usize) -> &str {
        &self.ids[node]
    }

    pub fn node_ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index_of.get(id).copied()
    }

    /// Whether an edge exists between `a` and `b` in either direction.
    pub fn connected(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].iter().any(|&(j, _)| j == b)
            || (self.directed && self.in_adjacency[a].iter().any(|&(j, _)| j == b))
    }

    /// Parse an edge-list file: one `src dst [weight]` record per line,
    /// whitespace separated, `#` comments ignored.
    pub fn parse_edge_file(path: &Path) -> Result<Vec<EdgeInput>> {
        let text = std::fs::read_to_string(path)?;
        let name = path.display().to_string();
        parse_edge_records(&text, &name)
    }
}

/// Parse edge-list text. Exposed separately so in-memory fixtures can use
/// the exact file syntax.
pub fn parse_edge_records(text: &str, source_name: &str) -> Result<Vec<EdgeInput>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(CoreError::MalformedRecord {
                path: source_name.to_string(),
                line: lineno + 1,
                message: format!("expected `src dst [weight]`, got {} fields", fields.len()),
            });
        }
        let weight = if fields.len() == 3 {
            fields[2].parse::<f64>().map_err(|_| CoreError::MalformedRecord {
                path: source_name.to_string(),
                line: lineno + 1,
                message: format!("invalid weight `{}`", fields[2]),
            })?
        } else {
            1.0
        };
        out.push(EdgeInput::new(fields[0], fields[1], weight));
    }
    Ok(out)
}

/// Density above which a transition matrix switches to dense storage;
/// powers of `T` on small ego-nets densify quickly.
const DENSE_THRESHOLD: f64 = 0.25;

#[derive(Debug, Clone)]
enum Storage {
    /// Row-major list of `(column, probability)` entries.
    Sparse(Vec<Vec<(usize, f64)>>),
    /// Row-major `n * n` buffer.
    Dense(Vec<f64>),
}

/// A row-stochastic random-walk transition matrix `T^steps`.
#[derive(Debug, Clone)]
pub struct TransitionMatrix {
    n: usize,
    steps: usize,
    storage: Storage,
}

impl TransitionMatrix {
    /// One-step transition matrix: row `i` is `w_ij / d_i` over the
    /// out-neighbors of `i`. Nodes with zero degree get a self-transition
    /// of 1 so every row stays stochastic.
    pub fn from_graph(g: &Graph) -> TransitionMatrix {
        let n = g.node_count();
        let mut rows: Vec<Vec<(usize, f64)>> = Vec::with_capacity(n);
        for i in 0..n {
            let d = g.degree(i);
            if d == 0.0 {
                rows.push(vec![(i, 1.0)]);
                continue;
            }
            let mut row: Vec<(usize, f64)> =
                g.neighbors(i).iter().map(|&(j, w)| (j, w / d)).collect();
            row.sort_unstable_by_key(|&(j, _)| j);
            rows.push(row);
        }
        TransitionMatrix { n, steps: 1, storage: Storage::Sparse(rows) }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Number of walk steps this matrix represents.
    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Entry `t_ij`, the probability of walking from `i` to `j` in
    /// `steps` steps.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match &self.storage {
            Storage::Sparse(rows) => rows[i]
                .iter()
                .find(|&&(col, _)| col == j)
                .map(|&(_, v)| v)
                .unwrap_or(0.0),
            Storage::Dense(data) => data[i * self.n + j],
        }
    }

    /// Sum of row `i`; 1 within 1e-9 for any valid matrix.
    pub fn row_sum(&self, i: usize) -> f64 {
        match &self.storage {
            Storage::Sparse(rows) => rows[i].iter().map(|&(_, v)| v).sum(),
            Storage::Dense(data) => data[i * self.n..(i + 1) * self.n].iter().sum(),
        }
    }

    fn nonzeros(&self) -> usize {
        match &self.storage {
            Storage::Sparse(rows) => rows.iter().map(Vec::len).sum(),
            Storage::Dense(data) => data.iter().filter(|v| **v != 0.0).count(),
        }
    }

    /// `T^k` by repeated multiplication. Requires a one-step matrix and
    /// `k >= 1`; `k = 0` is only meaningful as the identity-regularization
    /// path in the model layer.
    pub fn power(&self, k: usize) -> Result<TransitionMatrix> {
        if k == 0 {
            return Err(CoreError::InvalidPower { k });
        }
        assert_eq!(self.steps, 1, "power must start from a one-step matrix");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.multiply(self);
        }
        acc.steps = k;
        Ok(acc)
    }

    /// `self * rhs` as a new matrix, keeping sparse storage until the
    /// result density crosses [`DENSE_THRESHOLD`].
    fn multiply(&self, rhs: &TransitionMatrix) -> TransitionMatrix {
        fn visit(
            rhs: &TransitionMatrix,
            j: usize,
            a: f64,
            scratch: &mut [f64],
            cols: &mut Vec<usize>,
        ) {
            for (col, b) in rhs.row_entries(j) {
                let slot = &mut scratch[col];
                if *slot == 0.0 {
                    cols.push(col);
                }
                *slot += a * b;
            }
        }

        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut scratch = vec![0.0f64; n];
        let mut scratch_cols: Vec<usize> = Vec::new();
        let mut rows: Vec<Vec<(usize, f64)>> = Vec::with_capacity(n);
        let mut nnz = 0usize;
        for i in 0..n {
            scratch_cols.clear();
            match &self.storage {
                Storage::Sparse(r) => {
                    for &(j, a) in &r[i] {
                        visit(rhs, j, a, &mut scratch, &mut scratch_cols);
                    }
                }
                Storage::Dense(data) => {
                    for (j, &a) in data[i * n..(i + 1) * n].iter().enumerate() {
                        if a != 0.0 {
                            visit(rhs, j, a, &mut scratch, &mut scratch_cols);
                        }
                    }
                }
            }
            scratch_cols.sort_unstable();
            let mut row = Vec::with_capacity(scratch_cols.len());
            for &col in &scratch_cols {
                row.push((col, scratch[col]));
                scratch[col] = 0.0;
            }
            nnz += row.len();
            rows.push(row);
        }
        let density = nnz as f64 / (n * n).max(1) as f64;
        let storage = if density > DENSE_THRESHOLD {
            let mut data = vec![0.0f64; n * n];
            for (i, row) in rows.iter().enumerate() {
                for &(j, v) in row {
                    data[i * n + j] = v;
                }
            }
            Storage::Dense(data)
        } else {
            Storage::Sparse(rows)
        };
        TransitionMatrix { n, steps: self.steps + rhs.steps, storage }
    }

    fn row_entries(&self, i: usize) -> RowEntries<'_> {
        match &self.storage {
            Storage::Sparse(rows) => RowEntries::Sparse(rows[i].iter()),
            Storage::Dense(data) => {
                RowEntries::Dense { row: &data[i * self.n..(i + 1) * self.n], col: 0 }
            }
        }
    }

    /// `S = H * T` for a row-major `p x n` matrix `H` stored in `h`.
    /// Column `i` of the result mixes the columns of `H` along `t_ji`.
    pub fn apply_to_columns(&self, h: &[f64], p: usize) -> Vec<f64> {
        let n = self.n;
        assert_eq!(h.len(), p * n, "embedding buffer does not match p*n");
        let mut s = vec![0.0f64; p * n];
        for j in 0..n {
            for (i, w) in self.row_entries(j) {
                if w == 0.0 {
                    continue;
                }
                for r in 0..p {
                    s[r * n + i] += w * h[r * n + j];
                }
            }
        }
        s
    }

    /// `G_H = G_S * T^t`: adjoint of [`TransitionMatrix::apply_to_columns`],
    /// used to push gradients back through the regularization layer.
    pub fn apply_transpose_to_columns(&self, g: &[f64], p: usize) -> Vec<f64> {
        let n = self.n;
        assert_eq!(g.len(), p * n, "gradient buffer does not match p*n");
        let mut out = vec![0.0f64; p * n];
        for j in 0..n {
            for (i, w) in self.row_entries(j) {
                if w == 0.0 {
                    continue;
                }
                for r in 0..p {
                    out[r * n + j] += w * g[r * n + i];
                }
            }
        }
        out
    }
}

enum RowEntries<'a> {
    Sparse(std::slice::Iter<'a, (usize, f64)>),
    Dense { row: &'a [f64], col: usize },
}

impl Iterator for RowEntries<'_> {
    type Item = (usize, f64);

    fn next(&mut self) -> Option<(usize, f64)> {
        match self {
            RowEntries::Sparse(it) => it.next().map(|&(j, v)| (j, v)),
            RowEntries::Dense { row, col } => {
                while *col < row.len() {
                    let j = *col;
                    *col += 1;
                    if row[j] != 0.0 {
                        return Some((j, row[j]));
                    }
                }
                None
            }
        }
    }
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TransitionMatrix(n={}, steps={})", self.n, self.steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn undirected(pairs: &[(&str, &str)]) -> Graph {
        let edges: Vec<EdgeInput> =
            pairs.iter().map(|&(a, b)| EdgeInput::new(a, b, 1.0)).collect();
        Graph::build(&edges, GraphOptions::default(), &[]).unwrap()
    }

    #[test]
    fn builds_with_contiguous_reindexing() {
        let g = undirected(&[("a", "b"), ("b", "c")]);
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        let a = g.index_of("a").unwrap();
        let b = g.index_of("b").unwrap();
        let c = g.index_of("c").unwrap();
        assert_eq!(g.degree(a), 1.0);
        assert_eq!(g.degree(b), 2.0);
        assert_eq!(g.degree(c), 1.0);
    }

    #[test]
    fn explicit_node_list_admits_isolated_nodes() {
        let g = Graph::build(&[], GraphOptions::default(), &["a".to_string()]).unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_are_rejected() {
        let edges =
            vec![EdgeInput::new("a", "b", 2.0), EdgeInput::new("a", "b", 3.0)];
        let err = Graph::build(&edges, GraphOptions::default(), &[]).unwrap_err();
        assert!(matches!(err, CoreError::DuplicateEdge { .. }));
        // Reversed duplicates collide too in undirected graphs.
        let edges =
            vec![EdgeInput::new("a", "b", 2.0), EdgeInput::new("b", "a", 3.0)];
        let err = Graph::build(&edges, GraphOptions::default(), &[]).unwrap_err();
        assert!(matches!(err, CoreError::DuplicateEdge { .. }));
    }

    #[test]
    fn negative_weight_is_rejected() {
        let err = Graph::build(
            &[EdgeInput::new("a", "b", -1.0)],
            GraphOptions::default(),
            &[],
        )
        .unwrap_err();
        assert!(matches!(err, CoreError::NegativeWeight { .. }));
    }

    #[test]
    fn self_loops_and_zero_weights_are_dropped() {
        let edges = vec![
            EdgeInput::new("a", "a", 1.0),
            EdgeInput::new("a", "b", 0.0),
            EdgeInput::new("a", "b", 1.0),
        ];
        let g = Graph::build(&edges, GraphOptions::default(), &[]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn malformed_record_reports_line() {
        let err = parse_edge_records("a b\nbogus\n", "edges.txt").unwrap_err();
        match err {
            CoreError::MalformedRecord { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn edge_file_syntax() {
        let recs =
            parse_edge_records("# comment\na b\nb c 2.5\n\n", "edges.txt").unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].weight, 1.0);
        assert_eq!(recs[1].weight, 2.5);
    }

    #[test]
    fn two_node_transition_swaps() {
        let g = undirected(&[("a", "b")]);
        let t = TransitionMatrix::from_graph(&g);
        assert_eq!(t.get(0, 1), 1.0);
        assert_eq!(t.get(1, 0), 1.0);
        assert_eq!(t.get(0, 0), 0.0);
    }

    #[test]
    fn triangle_rows_are_half_half() {
        let g = undirected(&[("a", "b"), ("b", "c"), ("a", "c")]);
        let t = TransitionMatrix::from_graph(&g);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 0.0 } else { 0.5 };
                assert!((t.get(i, j) - expect).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn star_rows_match_degree_normalization() {
        // K_{1,4}: direct evaluation of w_ij / d_i.
        let g = undirected(&[("hub", "l1"), ("hub", "l2"), ("hub", "l3"), ("hub", "l4")]);
        let t = TransitionMatrix::from_graph(&g);
        let hub = g.index_of("hub").unwrap();
        for leaf in 1..5 {
            assert!((t.get(hub, leaf) - 0.25).abs() < 1e-15);
            assert!((t.get(leaf, hub) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn dangling_node_gets_self_transition() {
        let edges = vec![EdgeInput::new("a", "b", 1.0)];
        let g = Graph::build(&edges, GraphOptions { directed: true, symmetrize: false }, &[])
            .unwrap();
        let t = TransitionMatrix::from_graph(&g);
        let b = g.index_of("b").unwrap();
        assert_eq!(t.get(b, b), 1.0);
        assert!((t.row_sum(b) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn symmetrize_adds_reverse_edges() {
        let edges = vec![EdgeInput::new("a", "b", 2.0)];
        let g = Graph::build(&edges, GraphOptions { directed: true, symmetrize: true }, &[])
            .unwrap();
        assert_eq!(g.edge_count(), 2);
        let t = TransitionMatrix::from_graph(&g);
        let (a, b) = (g.index_of("a").unwrap(), g.index_of("b").unwrap());
        assert_eq!(t.get(b, a), 1.0);
    }

    #[test]
    fn two_hop_path_returns_home() {
        let g = undirected(&[("a", "b")]);
        let t = TransitionMatrix::from_graph(&g).power(2).unwrap();
        assert_eq!(t.steps(), 2);
        assert!((t.get(0, 0) - 1.0).abs() < 1e-12);
        assert!((t.get(1, 1) - 1.0).abs() < 1e-12);
        assert!(t.get(0, 1).abs() < 1e-12);
    }

    #[test]
    fn triangle_squared_matches_hand_multiplication() {
        // Hand multiply of the 3x3 matrix with 0.5 off-diagonal:
        // self entry 2 * 0.5 * 0.5 = 0.5, cross entry 0.5 * 0.5 = 0.25.
        let g = undirected(&[("a", "b"), ("b", "c"), ("a", "c")]);
        let t2 = TransitionMatrix::from_graph(&g).power(2).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 0.5 } else { 0.25 };
                assert!((t2.get(i, j) - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn power_one_is_identity_operation() {
        let g = undirected(&[("a", "b"), ("b", "c")]);
        let t = TransitionMatrix::from_graph(&g);
        let t1 = t.power(1).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.get(i, j), t1.get(i, j));
            }
        }
    }

    #[test]
    fn power_zero_is_rejected() {
        let g = undirected(&[("a", "b")]);
        let err = TransitionMatrix::from_graph(&g).power(0).unwrap_err();
        assert!(matches!(err, CoreError::InvalidPower { k: 0 }));
    }

    #[test]
    fn detailed_balance_on_undirected_graphs() {
        let g = undirected(&[("a", "b"), ("b", "c"), ("c", "d"), ("a", "c")]);
        let t = TransitionMatrix::from_graph(&g);
        for i in 0..g.node_count() {
            for j in 0..g.node_count() {
                let lhs = g.degree(i) * t.get(i, j);
                let rhs = g.degree(j) * t.get(j, i);
                assert!((lhs - rhs).abs() < 1e-12, "balance failed at ({i},{j})");
            }
        }
    }

    #[test]
    fn dense_fallback_preserves_stochastic_rows() {
        // A clique densifies immediately; high powers exercise the dense path.
        let mut pairs = Vec::new();
        let names: Vec<String> = (0..8).map(|i| format!("n{i}")).collect();
        for i in 0..8 {
            for j in (i + 1)..8 {
                pairs.push(EdgeInput::new(names[i].clone(), names[j].clone(), 1.0));
            }
        }
        let g = Graph::build(&pairs, GraphOptions::default(), &[]).unwrap();
        let t5 = TransitionMatrix::from_graph(&g).power(5).unwrap();
        assert!(matches!(t5.storage, Storage::Dense(_)));
        for i in 0..8 {
            assert!((t5.row_sum(i) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn apply_to_columns_mixes_neighbors() {
        // Triangle with unit columns: column i becomes the average of the
        // other two columns.
        let g = undirected(&[("a", "b"), ("b", "c"), ("a", "c")]);
        let t = TransitionMatrix::from_graph(&g);
        let h = vec![
            1.0, 0.0, 0.0, //
            0.0, 1.0, 0.0, //
            0.0, 0.0, 1.0,
        ];
        let s = t.apply_to_columns(&h, 3);
        let expect = vec![
            0.0, 0.5, 0.5, //
            0.5, 0.0, 0.5, //
            0.5, 0.5, 0.0,
        ];
        for (got, want) in s.iter().zip(&expect) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn transpose_apply_is_adjoint() {
        // <H T, G> == <H, G T^t> for random buffers.
        use rand::Rng;
        let mut rng = crate::rng::stage_rng(11, "adjoint");
        let g = undirected(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")]);
        let t = TransitionMatrix::from_graph(&g).power(3).unwrap();
        let n = g.node_count();
        let p = 4;
        let h: Vec<f64> = (0..p * n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let gr: Vec<f64> = (0..p * n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let ht = t.apply_to_columns(&h, p);
        let gt = t.apply_transpose_to_columns(&gr, p);
        let lhs: f64 = ht.iter().zip(&gr).map(|(a, b)| a * b).sum();
        let rhs: f64 = h.iter().zip(&gt).map(|(a, b)| a * b).sum();
        assert!((lhs - rhs).abs() < 1e-9);
    }
}
