//! Finite simple graphs, exhaustive matching search, and Cameron-Walker
//! recognition.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Largest edge count accepted by the exhaustive matching searches.
pub const MAX_SEARCH_EDGES: usize = 32;

/// Simple undirected graph on vertices `0..vertex_count`. Edges are stored as
/// `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `{u, v}`; repeated edges collapse.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidStructure(format!("loop at vertex {u}")));
        }
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::InvalidStructure(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.vertex_count
            )));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    fn check_search_size(&self) -> Result<()> {
        if self.edge_count() > MAX_SEARCH_EDGES {
            return Err(Error::GraphTooLarge {
                edges: self.edge_count(),
                cap: MAX_SEARCH_EDGES,
            });
        }
        Ok(())
    }
}

/// Maximum matching size by branch and bound over vertices: the lowest
/// unresolved vertex is either left unmatched or matched to a free neighbor.
pub fn matching_number(g: &Graph) -> Result<usize> {
    g.check_search_size()?;
    let adj = g.adjacency();
    let mut used = vec![false; g.vertex_count()];
    let mut best = 0;
    matching_search(&adj, 0, &mut used, 0, &mut best);
    Ok(best)
}

fn matching_search(
    adj: &[Vec<usize>],
    from: usize,
    used: &mut [bool],
    size: usize,
    best: &mut usize,
) {
    *best = (*best).max(size);
    let Some(v) = (from..adj.len()).find(|&v| !used[v] && adj[v].iter().any(|&w| !used[w])) else {
        return;
    };
    let free = (v..adj.len())
        .filter(|&u| !used[u] && adj[u].iter().any(|&w| !used[w]))
        .count();
    if size + free / 2 <= *best {
        return;
    }
    used[v] = true;
    for &w in &adj[v] {
        if !used[w] {
            used[w] = true;
            matching_search(adj, v + 1, used, size + 1, best);
            used[w] = false;
        }
    }
    // v stays unmatched
    matching_search(adj, v + 1, used, size, best);
    used[v] = false;
}

/// Maximum induced matching size: include/exclude over edges, where taking
/// `{u, v}` blocks every vertex of `N[u] ∪ N[v]` for later edges.
pub fn induced_matching_number(g: &Graph) -> Result<usize> {
    g.check_search_size()?;
    let adj = g.adjacency();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut blocked = vec![0u32; g.vertex_count()];
    let mut best = 0;
    induced_search(&adj, &edges, 0, &mut blocked, 0, &mut best);
    Ok(best)
}

fn induced_search(
    adj: &[Vec<usize>],
    edges: &[(usize, usize)],
    idx: usize,
    blocked: &mut [u32],
    size: usize,
    best: &mut usize,
) {
    *best = (*best).max(size);
    let open = edges[idx..]
        .iter()
        .filter(|&&(u, v)| blocked[u] == 0 && blocked[v] == 0)
        .count();
    if size + open <= *best {
        return;
    }
    let Some(offset) = edges[idx..]
        .iter()
        .position(|&(u, v)| blocked[u] == 0 && blocked[v] == 0)
    else {
        return;
    };
    let at = idx + offset;
    let (u, v) = edges[at];
    let closed: Vec<usize> = [u, v]
        .into_iter()
        .chain(adj[u].iter().copied())
        .chain(adj[v].iter().copied())
        .collect();
    for &w in &closed {
        blocked[w] += 1;
    }
    induced_search(adj, edges, at + 1, blocked, size + 1, best);
    for &w in &closed {
        blocked[w] -= 1;
    }
    induced_search(adj, edges, at + 1, blocked, size, best);
}

/// A star `K_{1,r}`, `r >= 1`: connected with one vertex on every edge.
pub fn is_star(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 2 || g.edge_count() != n - 1 || !g.is_connected() {
        return false;
    }
    g.degrees().iter().any(|&d| d == n - 1)
}

/// A star triangle: triangles glued at one common vertex, including a single
/// triangle. Equivalently the center sees everything and the rest of the graph
/// is a perfect matching.
pub fn is_star_triangle(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 3 || n.is_multiple_of(2) || g.edge_count() != 3 * (n - 1) / 2 {
        return false;
    }
    let deg = g.degrees();
    let Some(center) = (0..n).find(|&c| deg[c] == n - 1) else {
        return false;
    };
    (0..n).filter(|&v| v != center).all(|v| deg[v] == 2)
}

/// Why a graph is or is not Cameron-Walker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CwVerdict {
    CameronWalker,
    NoEdges,
    Disconnected,
    MatchingGap,
    Star,
    StarTriangle,
}

impl fmt::Display for CwVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CwVerdict::CameronWalker => "Cameron-Walker",
            CwVerdict::NoEdges => "no edges",
            CwVerdict::Disconnected => "disconnected",
            CwVerdict::MatchingGap => "m≠im",
            CwVerdict::Star => "star",
            CwVerdict::StarTriangle => "star triangle",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recognition {
    pub verdict: CwVerdict,
    pub matching: usize,
    pub induced_matching: usize,
}

impl Recognition {
    pub fn is_cameron_walker(&self) -> bool {
        self.verdict == CwVerdict::CameronWalker
    }
}

pub fn recognize(g: &Graph) -> Result<Recognition> {
    let matching = matching_number(g)?;
    let induced_matching = induced_matching_number(g)?;
    let verdict = if g.edge_count() == 0 {
        CwVerdict::NoEdges
    } else if !g.is_connected() {
        CwVerdict::Disconnected
    } else if matching != induced_matching {
        CwVerdict::MatchingGap
    } else if is_star(g) {
        CwVerdict::Star
    } else if is_star_triangle(g) {
        CwVerdict::StarTriangle
    } else {
        CwVerdict::CameronWalker
    };
    Ok(Recognition {
        verdict,
        matching,
        induced_matching,
    })
}

/// Connected, `m(G) = im(G)`, and neither a star nor a star triangle.
pub fn is_cameron_walker(g: &Graph) -> Result<bool> {
    Ok(recognize(g)?.is_cameron_walker())
}

/// A graph read from an edge list, with the original vertex names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

/// Parses the edge-list format: one edge per line as two whitespace-separated
/// tokens, `#` comments and blank lines skipped. Vertices are numbered in
/// order of first appearance.
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two vertex names, found {}", tokens.len()),
            });
        };
        if a == b {
            return Err(Error::LoopEdge {
                line: line_no,
                vertex: a.to_string(),
            });
        }
        let mut id = |name: &str| {
            *index.entry(name.to_string()).or_insert_with(|| {
                labels.push(name.to_string());
                labels.len() - 1
            })
        };
        let (u, v) = (id(a), id(b));
        pairs.push((u, v));
    }
    let graph = Graph::from_edges(labels.len(), pairs)?;
    Ok(LabeledGraph { graph, labels })
}

/// Edge list text, one `u v` line per edge, lines sorted.
pub fn emit_edge_list(g: &Graph, labels: Option<&[String]>) -> Result<String> {
    let names = vertex_names(g, labels)?;
    let mut lines: Vec<String> = g
        .edges()
        .map(|(u, v)| format!("{} {}", names[u], names[v]))
        .collect();
    lines.sort();
    Ok(lines.into_iter().map(|l| l + "\n").collect())
}

fn vertex_names(g: &Graph, labels: Option<&[String]>) -> Result<Vec<String>> {
    match labels {
        Some(l) if l.len() != g.vertex_count() => Err(Error::LabelCount {
            labels: l.len(),
            vertices: g.vertex_count(),
        }),
        Some(l) => Ok(l.to_vec()),
        None => Ok((0..g.vertex_count()).map(|i| format!("x{i}")).collect()),
    }
}

/// A squarefree quadratic generator `x_u x_v` of the edge ideal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub first: String,
    pub second: String,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first, self.second)
    }
}

/// Generators of `I(G)`, one per edge. With labels, endpoints and the list
/// are ordered by label; without, variables are `x0, x1, ...` ordered by index.
pub fn edge_ideal_generators(g: &Graph, labels: Option<&[String]>) -> Result<Vec<Generator>> {
    let names = vertex_names(g, labels)?;
    let mut keyed: Vec<((String, String), Generator)> = g
        .edges()
        .map(|(u, v)| {
            let (u, v) = if labels.is_some() && names[v] < names[u] {
                (v, u)
            } else {
                (u, v)
            };
            let sort_key = if labels.is_some() {
                (names[u].clone(), names[v].clone())
            } else {
                (format!("{u:020}"), format!("{v:020}"))
            };
            let gen = Generator {
                first: names[u].clone(),
                second: names[v].clone(),
            };
            (sort_key, gen)
        })
        .collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

pub fn format_ideal(gens: &[Generator]) -> String {
    let body: Vec<String> = gens.iter().map(ToString::to_string).collect();
    format!("({})", body.join(","))
}
