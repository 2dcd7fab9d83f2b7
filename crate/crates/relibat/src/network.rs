//! Binary-state network model: topology, arc-state vectors, and
//! time-dependent arc reliability tables.
//!
//! Nodes are numbered `1..=n`; node 1 is the source and node `n` the sink.
//! Arc `i` (1-based in prose, index `i-1` in slices) always occupies
//! coordinate `i` of every state vector, in file order.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Undirected network with perfectly reliable nodes and binary-state arcs.
///
/// Immutable after construction; adjacency lists are precomputed so
/// connectivity queries never rebuild them.
#[derive(Debug, Clone)]
pub struct Network {
    node_count: usize,
    arcs: Vec<(usize, usize)>,
    /// adjacency[v] = (neighbor, arc index) pairs, nodes 1-based.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Network {
    /// Builds a network from 1-based arc endpoint pairs.
    pub fn new(node_count: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        if node_count < 2 {
            return Err(Error::Format {
                what: "network",
                message: format!("need at least 2 nodes, got {node_count}"),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for (i, &(u, v)) in arcs.iter().enumerate() {
            let line = i + 2; // matches file layout: header line + arcs
            if u == v {
                return Err(Error::NetworkParse {
                    line,
                    message: format!("self-loop at node {u}"),
                });
            }
            if u == 0 || v == 0 || u > node_count || v > node_count {
                return Err(Error::NetworkParse {
                    line,
                    message: format!("arc ({u}, {v}) references a node outside 1..={node_count}"),
                });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::NetworkParse {
                    line,
                    message: format!("duplicate arc ({u}, {v})"),
                });
            }
        }
        let mut adjacency = vec![Vec::new(); node_count + 1];
        for (i, &(u, v)) in arcs.iter().enumerate() {
            adjacency[u].push((v, i));
            adjacency[v].push((u, i));
        }
        for node in 1..=node_count {
            if adjacency[node].is_empty() {
                return Err(Error::Format {
                    what: "network",
                    message: format!("node {node} is not an endpoint of any arc"),
                });
            }
        }
        Ok(Self {
            node_count,
            arcs,
            adjacency,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Number of arcs `m`.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn source(&self) -> usize {
        1
    }

    pub fn sink(&self) -> usize {
        self.node_count
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// `(neighbor, arc index)` pairs incident to `node` (1-based).
    pub fn neighbors(&self, node: usize) -> &[(usize, usize)] {
        &self.adjacency[node]
    }
}

/// Full arc-state assignment: coordinate `i` is `true` when arc `a_i` works.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateVector {
    states: Vec<bool>,
}

impl StateVector {
    pub fn new(states: Vec<bool>) -> Self {
        Self { states }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            states: vec![false; len],
        }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn get(&self, coord: usize) -> bool {
        self.states[coord]
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.states
    }

    /// Renders the vector as the 0/1 tuple form used in reports, e.g. `(1, 0, 1)`.
    pub fn to_tuple_string(&self) -> String {
        tuple_string(&self.states)
    }
}

impl From<Vec<bool>> for StateVector {
    fn from(states: Vec<bool>) -> Self {
        Self::new(states)
    }
}

/// Assignment to only the first `delta` arc coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Supervector {
    states: Vec<bool>,
}

impl Supervector {
    pub fn new(states: Vec<bool>) -> Self {
        Self { states }
    }

    /// Number of fixed coordinates, written delta elsewhere.
    pub fn delta(&self) -> usize {
        self.states.len()
    }

    pub fn get(&self, coord: usize) -> bool {
        self.states[coord]
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.states
    }

    /// Compact bit string, coordinate 1 first, e.g. `10` for (1, 0).
    pub fn to_bit_string(&self) -> String {
        self.states
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    pub fn to_tuple_string(&self) -> String {
        tuple_string(&self.states)
    }
}

impl From<Vec<bool>> for Supervector {
    fn from(states: Vec<bool>) -> Self {
        Self::new(states)
    }
}

fn tuple_string(states: &[bool]) -> String {
    let bits: Vec<&str> = states.iter().map(|&b| if b { "1" } else { "0" }).collect();
    format!("({})", bits.join(", "))
}

/// Arc reliability table over discrete time: row `t` holds `Pr(t, a_i)` for
/// every arc, `t = 0..=steps` (row 0 is the initial reliability).
#[derive(Debug, Clone)]
pub struct TimeDistribution<T: Scalar = f64> {
    steps: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> TimeDistribution<T> {
    /// `rows` must hold `steps + 1` rows of equal width with entries in [0, 1].
    pub fn new(steps: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        if rows.len() != steps + 1 {
            return Err(Error::Format {
                what: "time distribution",
                message: format!("expected {} rows, got {}", steps + 1, rows.len()),
            });
        }
        let width = rows.first().map(Vec::len).unwrap_or(0);
        for (t, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::Format {
                    what: "time distribution",
                    message: format!("row {t} has {} entries, expected {width}", row.len()),
                });
            }
            for (i, &p) in row.iter().enumerate() {
                if !(p >= T::zero() && p <= T::one()) {
                    return Err(Error::ProbabilityRange {
                        index: i,
                        value: p.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        Ok(Self { steps, rows })
    }

    /// Number of time steps `N_term` (row 0 not counted).
    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn arc_count(&self) -> usize {
        self.rows.first().map(Vec::len).unwrap_or(0)
    }

    /// Reliability row at time `t`, `0 <= t <= steps`.
    pub fn row(&self, t: usize) -> &[T] {
        &self.rows[t]
    }
}

/// Outcome of parsing a network file: the topology plus the optional
/// per-arc initial reliability column.
#[derive(Debug, Clone)]
pub struct ParsedNetwork {
    pub network: Network,
    pub initial_reliability: Option<Vec<f64>>,
}

/// Parses the line-oriented network format.
///
/// First non-comment line: `n m`. Then `m` lines `u v [p0]`. Lines starting
/// with `#` and blank lines are skipped. Arc index equals order of appearance.
pub fn parse_network(text: &str) -> Result<ParsedNetwork> {
    let mut header: Option<(usize, usize)> = None;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut probs: Vec<Option<f64>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if header.is_none() {
            if fields.len() != 2 {
                return Err(Error::NetworkParse {
                    line: line_no,
                    message: format!("expected header \"n m\", got \"{line}\""),
                });
            }
            let n = parse_field(fields[0], line_no, "node count")?;
            let m = parse_field(fields[1], line_no, "arc count")?;
            header = Some((n, m));
            continue;
        }
        if fields.len() != 2 && fields.len() != 3 {
            return Err(Error::NetworkParse {
                line: line_no,
                message: format!("expected \"u v [p0]\", got \"{line}\""),
            });
        }
        let u = parse_field(fields[0], line_no, "node id")?;
        let v = parse_field(fields[1], line_no, "node id")?;
        let (n, _) = header.unwrap();
        if u == v {
            return Err(Error::NetworkParse {
                line: line_no,
                message: format!("self-loop at node {u}"),
            });
        }
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::NetworkParse {
                line: line_no,
                message: format!("arc ({u}, {v}) references a node outside 1..={n}"),
            });
        }
        if arcs
            .iter()
            .any(|&(a, b)| (a.min(b), a.max(b)) == (u.min(v), u.max(v)))
        {
            return Err(Error::NetworkParse {
                line: line_no,
                message: format!("duplicate arc ({u}, {v})"),
            });
        }
        let p0 = if fields.len() == 3 {
            let p: f64 = fields[2].parse().map_err(|_| Error::NetworkParse {
                line: line_no,
                message: format!("bad probability \"{}\"", fields[2]),
            })?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::NetworkParse {
                    line: line_no,
                    message: format!("initial reliability {p} outside [0, 1]"),
                });
            }
            Some(p)
        } else {
            None
        };
        arcs.push((u, v));
        probs.push(p0);
    }

    let (n, m) = header.ok_or(Error::Format {
        what: "network",
        message: "file has no header line".into(),
    })?;
    if arcs.len() != m {
        return Err(Error::Format {
            what: "network",
            message: format!("header declares {m} arcs but file lists {}", arcs.len()),
        });
    }
    let network = Network::new(n, arcs)?;
    let initial_reliability = if probs.iter().all(Option::is_some) {
        Some(probs.into_iter().map(Option::unwrap).collect())
    } else if probs.iter().all(Option::is_none) {
        None
    } else {
        return Err(Error::Format {
            what: "network",
            message: "initial reliabilities must be given for all arcs or none".into(),
        });
    };
    Ok(ParsedNetwork {
        network,
        initial_reliability,
    })
}

fn parse_field(s: &str, line: usize, what: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::NetworkParse {
        line,
        message: format!("bad {what} \"{s}\""),
    })
}

/// Probability of a full state vector under independent arcs:
/// the product over coordinates of `p_i` (working) or `1 - p_i` (failed).
pub fn vector_probability<T: Scalar>(states: &[bool], probs: &[T]) -> Result<T> {
    if states.len() != probs.len() {
        return Err(Error::LengthMismatch {
            got: states.len(),
            expected: probs.len(),
        });
    }
    Ok(prefix_probability(states, probs))
}

/// Probability of a supervector: the same product restricted to the first
/// `delta` coordinates.
pub fn supervector_probability<T: Scalar>(prefix: &[bool], probs: &[T]) -> Result<T> {
    if prefix.len() > probs.len() {
        return Err(Error::DeltaTooLarge {
            delta: prefix.len(),
            m: probs.len(),
        });
    }
    Ok(prefix_probability(prefix, probs))
}

/// Shared product rule over `states.len()` leading coordinates. Both the
/// exact enumerator and the stratified estimator go through here, so the
/// delta = m degenerate case reproduces exact arithmetic bit for bit.
#[inline]
pub(crate) fn prefix_probability<T: Scalar>(states: &[bool], probs: &[T]) -> T {
    let mut product = T::one();
    for (i, &working) in states.iter().enumerate() {
        let p = probs[i];
        product = product * if working { p } else { T::one() - p };
    }
    product
}
