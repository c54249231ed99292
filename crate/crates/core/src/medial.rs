//! Medial graphs and wiring diagrams.
//!
//! A wiring diagram is n horizontal wires (levels numbered top-down) with
//! crossings read left to right; letter h crosses the wires at levels h and
//! h+1. Strands are numbered by their sources: strand i is the wire starting
//! at level i, and in a reduced diagram the smaller-labelled strand always
//! enters a crossing from above.
//!
//! A medial graph is built combinatorially from a plane network's rotation
//! system: one degree-4 vertex per network edge, 2n boundary stubs, strands
//! extracted by going straight through every vertex. Both structures reduce
//! to the same `StrandDiagram`, which is what the vertex-model operations
//! consume.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use crate::error::{Error, Result};
use crate::network::{Edge, PlaneNetwork, VertexId};
use crate::ring::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Black => 'b',
            Color::White => 'w',
        }
    }
}

/// Parity coloring used on standard graphs: the crossing of strands i < j is
/// black iff i + j is even.
pub fn parity_color(i: usize, j: usize) -> Color {
    if (i + j) % 2 == 0 {
        Color::Black
    } else {
        Color::White
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiringDiagram {
    pub n_strands: usize,
    /// Letters h_k in 1..n_strands, left to right.
    pub word: Vec<usize>,
    /// One color per crossing, aligned with `word`.
    pub colors: Vec<Color>,
}

/// One crossing of a strand diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    /// Sorted strand pair (i, j), 1-based, i < j.
    pub strands: (usize, usize),
    pub color: Color,
}

/// Combinatorial core shared by wiring diagrams and medial graphs: the
/// crossings in a fixed linear extension of the strand-flow order, plus each
/// strand's crossing sequence from source to sink.
#[derive(Debug, Clone)]
pub struct StrandDiagram {
    pub n_strands: usize,
    /// Crossings listed in a linear extension of the strand-flow order.
    pub crossings: Vec<Crossing>,
    /// strand_paths[i] = crossing indices met by strand i+1, source to sink.
    pub strand_paths: Vec<Vec<usize>>,
}

impl StrandDiagram {
    /// Diagrams are compared by content: strands are canonically labelled,
    /// and in reduced diagrams a pair crosses at most once, so the sequences
    /// of (pair, color) along each strand identify the diagram.
    pub fn canonical_key(&self) -> Vec<Vec<((usize, usize), Color)>> {
        self.strand_paths
            .iter()
            .map(|path| {
                path.iter()
                    .map(|&c| (self.crossings[c].strands, self.crossings[c].color))
                    .collect()
            })
            .collect()
    }

    pub fn same_diagram(&self, other: &StrandDiagram) -> bool {
        self.n_strands == other.n_strands && self.canonical_key() == other.canonical_key()
    }

    /// The stored linear extension (for wiring diagrams, word order).
    pub fn crossing_order(&self) -> Vec<usize> {
        (0..self.crossings.len()).collect()
    }

    /// Recover a wiring word: place strand i at level i and replay crossings,
    /// requiring the two strands of each crossing to sit on adjacent levels.
    /// Crossings are taken greedily in stored order, skipping ahead when an
    /// incomparable crossing blocks; errors if the diagram is not
    /// wiring-shaped.
    pub fn to_word(&self) -> Result<Vec<usize>> {
        let n = self.n_strands;
        let m = self.crossings.len();
        // strand at each level, top-down
        let mut level_of: Vec<usize> = (0..n).collect(); // strand index (0-based) -> level (0-based)
        let mut done = vec![false; m];
        let mut progress = vec![0usize; n]; // next position along each strand path
        let mut word = Vec::with_capacity(m);
        while word.len() < m {
            let mut advanced = false;
            for c in 0..m {
                if done[c] {
                    continue;
                }
                let (i, j) = self.crossings[c].strands;
                // available iff it is the next crossing on both of its strands
                let ready = |s: usize| {
                    self.strand_paths[s - 1]
                        .get(progress[s - 1])
                        .is_some_and(|&x| x == c)
                };
                if !(ready(i) && ready(j)) {
                    continue;
                }
                let (li, lj) = (level_of[i - 1], level_of[j - 1]);
                if li.abs_diff(lj) != 1 {
                    continue;
                }
                word.push(li.min(lj) + 1);
                level_of.swap(i - 1, j - 1);
                progress[i - 1] += 1;
                progress[j - 1] += 1;
                done[c] = true;
                advanced = true;
                break;
            }
            if !advanced {
                return Err(Error::Embedding(
                    "diagram is not representable as a wiring word".into(),
                ));
            }
        }
        Ok(word)
    }
}

impl WiringDiagram {
    /// Strand pair crossing at each word position, tracked by replaying the
    /// word. Errors if some pair crosses twice (non-reduced word) or a letter
    /// is out of range.
    pub fn pairs_of_word(word: &[usize], n: usize) -> Result<Vec<(usize, usize)>> {
        if n < 2 {
            return Err(Error::Size(format!("need at least 2 strands, got {n}")));
        }
        let mut at_level: Vec<usize> = (1..=n).collect(); // strand at each level, top-down
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut pairs = Vec::with_capacity(word.len());
        for (k, &h) in word.iter().enumerate() {
            if h == 0 || h >= n {
                return Err(Error::Argument(format!(
                    "letter {h} at position {} out of range 1..{}",
                    k + 1,
                    n - 1
                )));
            }
            let (a, b) = (at_level[h - 1], at_level[h]);
            let pair = (a.min(b), a.max(b));
            if !seen.insert(pair) {
                return Err(Error::Argument(format!(
                    "word is not reduced: strands {} and {} cross twice",
                    pair.0, pair.1
                )));
            }
            pairs.push(pair);
            at_level.swap(h - 1, h);
        }
        Ok(pairs)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        Self::pairs_of_word(&self.word, self.n_strands).expect("diagram validated on construction")
    }

    pub fn strand_diagram(&self) -> StrandDiagram {
        let pairs = self.pairs();
        let crossings: Vec<Crossing> = pairs
            .iter()
            .zip(&self.colors)
            .map(|(&strands, &color)| Crossing { strands, color })
            .collect();
        let mut strand_paths = vec![Vec::new(); self.n_strands];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            strand_paths[i - 1].push(k);
            strand_paths[j - 1].push(k);
        }
        StrandDiagram {
            n_strands: self.n_strands,
            crossings,
            strand_paths,
        }
    }

    // -- text form: "strands N" / word / colors -----------------------------

    pub fn to_text(&self) -> String {
        let word: Vec<String> = self.word.iter().map(|h| h.to_string()).collect();
        let colors: Vec<String> = self.colors.iter().map(|c| c.letter().to_string()).collect();
        format!(
            "strands {}\n{}\n{}\n",
            self.n_strands,
            word.join(" "),
            colors.join(" ")
        )
    }

    pub fn parse_text(text: &str) -> Result<WiringDiagram> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let perr = |line: usize, msg: &str| Error::Parse {
            line,
            col: 1,
            msg: msg.to_string(),
        };
        let head = lines.next().ok_or_else(|| perr(1, "missing strands line"))?;
        let n: usize = head
            .trim()
            .strip_prefix("strands")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| perr(1, "expected `strands N`"))?;
        let word_line = lines.next().ok_or_else(|| perr(2, "missing word line"))?;
        let word: Vec<usize> = word_line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| perr(2, "bad word letter")))
            .collect::<Result<_>>()?;
        let color_line = lines.next().ok_or_else(|| perr(3, "missing colors line"))?;
        let colors: Vec<Color> = color_line
            .split_whitespace()
            .map(|t| match t {
                "b" => Ok(Color::Black),
                "w" => Ok(Color::White),
                _ => Err(perr(3, "colors must be `b` or `w`")),
            })
            .collect::<Result<_>>()?;
        if colors.len() != word.len() {
            return Err(perr(3, "colors length must match word length"));
        }
        // validate reducedness
        WiringDiagram::pairs_of_word(&word, n)?;
        Ok(WiringDiagram {
            n_strands: n,
            word,
            colors,
        })
    }
}

/// Wiring diagram of a reduced word with the parity coloring.
pub fn wiring_from_word(word: &[usize], n_strands: usize) -> Result<WiringDiagram> {
    let pairs = WiringDiagram::pairs_of_word(word, n_strands)?;
    let colors = pairs.iter().map(|&(i, j)| parity_color(i, j)).collect();
    Ok(WiringDiagram {
        n_strands,
        word: word.to_vec(),
        colors,
    })
}

/// The reduced word 1 2 .. (N-1) 1 2 .. (N-2) .. 1 whose pseudo-line
/// arrangement is the medial diagram of the standard graph on N boundary
/// nodes. Its crossings run through the strand pairs in lexicographic order.
pub fn standard_word(n: usize) -> Vec<usize> {
    let mut w = Vec::with_capacity(n * (n - 1) / 2);
    for block in 1..n {
        for h in 1..=(n - block) {
            w.push(h);
        }
    }
    w
}

// ---------------------------------------------------------------------------
// Medial graph of a plane network
// ---------------------------------------------------------------------------

/// One oriented strand: boundary points are the 2n stub labels t_1..t_2n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    pub source: usize,
    pub sink: usize,
    /// Edge indices of the interior vertices crossed, source to sink.
    pub through: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct MedialGraph {
    pub n_boundary: usize,
    /// Strands sorted by source label; strand i+1 = strands[i].
    pub strands: Vec<Strand>,
    /// Per network edge: the sorted strand pair crossing there and its color.
    pub crossing_at_edge: Vec<Crossing>,
    /// The canonical strand-diagram view (crossings renumbered into a linear
    /// extension of the strand-flow order).
    pub diagram: StrandDiagram,
    /// diagram crossing index -> network edge index
    pub edge_of_crossing: Vec<usize>,
}

// slot addressing inside the construction: (edge, end 0|1, side 0=P|1=S)
type Slot = (usize, u8, u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Link {
    Stub(usize),
    Inner(Slot),
}

/// Build the medial graph from the rotation system. Boundary stubs follow
/// the anchored convention: the stub after boundary vertex v_i (label t_2i)
/// attaches on the predecessor side of the first edge in v_i's rotation, the
/// stub before it (t_{2i-1}) on the successor side of the last edge.
pub fn medial_of_network(net: &PlaneNetwork) -> Result<MedialGraph> {
    let violations = net.validate();
    if !violations.is_empty() {
        return Err(Error::Embedding(format!(
            "invalid network: {}",
            violations.join("; ")
        )));
    }
    let n = net.boundary.len();
    let mut links: BTreeMap<Slot, Link> = BTreeMap::new();
    let mut link = |a: Slot, b: Link, links: &mut BTreeMap<Slot, Link>| {
        links.insert(a, b);
    };

    let end_of = |edge: usize, v: &str| -> u8 {
        if net.edges[edge].u == v {
            0
        } else {
            1
        }
    };

    for (v, rot) in &net.rotation {
        let d = rot.len();
        if d == 0 {
            return Err(Error::Embedding(format!("isolated vertex {v}")));
        }
        let boundary_pos = net.boundary.iter().position(|b| b == v);
        let pairs: Vec<(usize, usize)> = if boundary_pos.is_some() {
            (0..d.saturating_sub(1)).map(|k| (k, k + 1)).collect()
        } else {
            (0..d).map(|k| (k, (k + 1) % d)).collect()
        };
        for (a, b) in pairs {
            let ea = rot[a];
            let eb = rot[b];
            let sa: Slot = (ea, end_of(ea, v), 1); // successor side of ea at v
            let sb: Slot = (eb, end_of(eb, v), 0); // predecessor side of eb at v
            link(sa, Link::Inner(sb), &mut links);
            link(sb, Link::Inner(sa), &mut links);
        }
        if let Some(i) = boundary_pos {
            // 1-based stub labels: t_{2i+1} before v, t_{2i+2} after
            let before = 2 * i + 1;
            let after = 2 * i + 2;
            let first = rot[0];
            let last = rot[d - 1];
            link((first, end_of(first, v), 0), Link::Stub(after), &mut links);
            link((last, end_of(last, v), 1), Link::Stub(before), &mut links);
        }
    }

    // sanity: every slot of every edge must be linked
    for e in 0..net.edges.len() {
        for end in [0u8, 1] {
            for side in [0u8, 1] {
                if !links.contains_key(&(e, end, side)) {
                    return Err(Error::Embedding(format!(
                        "edge {e} has an unattached medial slot"
                    )));
                }
            }
        }
    }

    // stub -> slot map
    let mut stub_slot: BTreeMap<usize, Slot> = BTreeMap::new();
    for (slot, l) in &links {
        if let Link::Stub(t) = l {
            if stub_slot.insert(*t, *slot).is_some() {
                return Err(Error::Embedding(format!("stub t{t} attached twice")));
            }
        }
    }
    if stub_slot.len() != 2 * n {
        return Err(Error::Embedding(format!(
            "expected {} boundary stubs, found {}",
            2 * n,
            stub_slot.len()
        )));
    }

    // walk strands from each stub; keep each strand oriented from its
    // smaller boundary label to the larger
    let mut raw: Vec<Strand> = Vec::new();
    let mut seen_start: BTreeSet<usize> = BTreeSet::new();
    for t in 1..=2 * n {
        if seen_start.contains(&t) {
            continue;
        }
        let mut through = Vec::new();
        let mut at = stub_slot[&t];
        let sink;
        loop {
            let (e, end, side) = at;
            through.push(e);
            // go straight: same side kind, other endpoint
            let out = (e, 1 - end, side);
            match links[&out] {
                Link::Stub(t2) => {
                    sink = t2;
                    break;
                }
                Link::Inner(next) => at = next,
            }
        }
        seen_start.insert(t);
        seen_start.insert(sink);
        if sink == t || through.iter().collect::<BTreeSet<_>>().len() != through.len() {
            return Err(Error::Embedding(
                "strand crosses itself; network is outside the reduced class".into(),
            ));
        }
        let (source, sink, through) = if t < sink {
            (t, sink, through)
        } else {
            (sink, t, through.into_iter().rev().collect())
        };
        raw.push(Strand {
            source,
            sink,
            through,
        });
    }
    raw.sort_by_key(|s| s.source);
    if raw.len() != n {
        return Err(Error::Embedding(format!(
            "expected {} strands, found {}",
            n,
            raw.len()
        )));
    }
    // arrival end of each strand pass, walking from the source stub:
    // (source label, edge) -> endpoint index of the slot it entered through
    let mut arrival_by_source: BTreeMap<(usize, usize), u8> = BTreeMap::new();
    for s in &raw {
        let mut at = stub_slot[&s.source];
        loop {
            let (e, end, side) = at;
            arrival_by_source.insert((s.source, e), end);
            let out = (e, 1 - end, side);
            match links[&out] {
                Link::Stub(_) => break,
                Link::Inner(next) => at = next,
            }
        }
    }

    // crossings per edge: exactly two strand passes
    let mut passes: BTreeMap<usize, Vec<usize>> = BTreeMap::new(); // edge -> strand labels
    for (i, s) in raw.iter().enumerate() {
        for &e in &s.through {
            passes.entry(e).or_default().push(i + 1);
        }
    }
    let mut crossing_at_edge = Vec::with_capacity(net.edges.len());
    for e in 0..net.edges.len() {
        let p = passes.get(&e).cloned().unwrap_or_default();
        if p.len() != 2 {
            return Err(Error::Embedding(format!(
                "edge {e} is crossed by {} strand passes, expected 2",
                p.len()
            )));
        }
        let (i, j) = (p[0].min(p[1]), p[0].max(p[1]));
        let end_i = arrival_by_source[&(raw[i - 1].source, e)];
        let end_j = arrival_by_source[&(raw[j - 1].source, e)];
        // both strands entering from the same endpoint of the network edge
        // means their sources sit on the same side of its line
        let color = if end_i == end_j {
            Color::White
        } else {
            Color::Black
        };
        crossing_at_edge.push(Crossing {
            strands: (i, j),
            color,
        });
    }

    // topological order of the crossings under strand flow
    let m = net.edges.len();
    let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
    let mut indeg = vec![0usize; m];
    for s in &raw {
        for w in s.through.windows(2) {
            if succ[w[0]].insert(w[1]) {
                indeg[w[1]] += 1;
            }
        }
    }
    let mut avail: BTreeSet<usize> = (0..m).filter(|&e| indeg[e] == 0).collect();
    let mut topo = Vec::with_capacity(m);
    while let Some(&e) = avail.iter().next() {
        avail.remove(&e);
        topo.push(e);
        for &f in &succ[e] {
            indeg[f] -= 1;
            if indeg[f] == 0 {
                avail.insert(f);
            }
        }
    }
    if topo.len() != m {
        return Err(Error::Embedding(
            "medial strands contain a directed cycle".into(),
        ));
    }
    let pos_of_edge: BTreeMap<usize, usize> =
        topo.iter().enumerate().map(|(p, &e)| (e, p)).collect();

    let crossings: Vec<Crossing> = topo.iter().map(|&e| crossing_at_edge[e].clone()).collect();
    let strand_paths: Vec<Vec<usize>> = raw
        .iter()
        .map(|s| s.through.iter().map(|e| pos_of_edge[e]).collect())
        .collect();

    Ok(MedialGraph {
        n_boundary: n,
        strands: raw,
        crossing_at_edge,
        diagram: StrandDiagram {
            n_strands: n,
            crossings,
            strand_paths,
        },
        edge_of_crossing: topo,
    })
}

// ---------------------------------------------------------------------------
// Standard graphs: invert the medial construction on the canonical word.
// ---------------------------------------------------------------------------

/// The chambers of a wiring diagram, checkerboard-classified. Height of a
/// region = number of wires above it (0 = above all wires, n = below all).
/// Odd-height chambers are the network vertices, even-height chambers its
/// faces; crossings are the network edges.
struct Chambers {
    n: usize,
    m: usize,
    /// positions (0-based) of the crossings at each height 1..n-1
    splits: Vec<Vec<usize>>,
}

impl Chambers {
    fn new(word: &[usize], n: usize) -> Chambers {
        let mut splits = vec![Vec::new(); n + 1];
        for (k, &h) in word.iter().enumerate() {
            splits[h].push(k);
        }
        Chambers {
            n,
            m: word.len(),
            splits,
        }
    }

    /// chamber containing word position k at height h
    fn slice_at(&self, h: usize, k: usize) -> usize {
        self.splits[h].iter().take_while(|&&p| p < k).count()
    }

    fn chamber_count(&self, h: usize) -> usize {
        self.splits[h].len() + 1
    }
}

/// Plane network whose medial wiring diagram is the given reduced word, with
/// unit conductances. Edge k of the result corresponds to word position k.
pub fn network_from_wiring(word: &[usize], n: usize) -> Result<PlaneNetwork> {
    WiringDiagram::pairs_of_word(word, n)?; // validates
    let ch = Chambers::new(word, n);
    let m = ch.m;

    // vertex chambers: odd heights
    let mut chamber_name: BTreeMap<(usize, usize), VertexId> = BTreeMap::new();

    // boundary arcs in circle order starting at the bottom arc:
    // heights [n, n-1, .., 1 (right side), 0 (top), 1, .., n-1 (left side)]
    // the right-side chamber at height h is the last slice, the left-side one
    // is slice 0, the bottom arc is height n slice 0, the top height 0.
    let mut arc_chambers: Vec<(usize, usize)> = Vec::new();
    arc_chambers.push((n, 0));
    for h in (1..n).rev() {
        arc_chambers.push((h, ch.chamber_count(h) - 1));
    }
    arc_chambers.push((0, 0));
    for h in 1..n {
        arc_chambers.push((h, 0));
    }

    let mut boundary: Vec<VertexId> = Vec::new();
    for &(h, s) in &arc_chambers {
        if h % 2 == 1 {
            let name = format!("b{}", boundary.len() + 1);
            boundary.push(name.clone());
            if chamber_name.insert((h, s), name).is_some() {
                return Err(Error::Embedding(
                    "boundary chamber visited twice; word too small".into(),
                ));
            }
        }
    }
    // interior vertex chambers
    let mut interior_count = 0;
    for h in (1..=n).step_by(2) {
        for s in 0..ch.chamber_count(h) {
            chamber_name.entry((h, s)).or_insert_with(|| {
                interior_count += 1;
                format!("w{interior_count}")
            });
        }
    }

    // the two vertex chambers joined by each crossing
    let endpoint_chambers = |k: usize| -> ((usize, usize), (usize, usize)) {
        let h = word[k];
        if h % 2 == 1 {
            // west and east chambers at height h
            let s = ch.slice_at(h, k);
            ((h, s), (h, s + 1))
        } else {
            // north (height h-1) and south (height h+1) chambers
            ((h - 1, ch.slice_at(h - 1, k)), (h + 1, ch.slice_at(h + 1, k)))
        }
    };

    let edges: Vec<Edge> = (0..m)
        .map(|k| {
            let (a, b) = endpoint_chambers(k);
            Edge {
                u: chamber_name[&a].clone(),
                v: chamber_name[&b].clone(),
                gamma: Rational::one(),
            }
        })
        .collect();

    // rotation at a vertex chamber (h, s): west end crossing, south edge
    // crossings west-to-east, east end crossing, north edge crossings
    // east-to-west. Boundary chambers are anchored so that the first edge is
    // the one adjacent to the stub that follows the vertex in circle order.
    let mut rotation: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (&(h, s), name) in &chamber_name {
        let lo: isize = if s == 0 {
            -1
        } else {
            ch.splits[h][s - 1] as isize
        };
        let hi: isize = if s == ch.splits[h].len() {
            m as isize
        } else {
            ch.splits[h][s] as isize
        };
        let west: Option<usize> = (lo >= 0).then_some(lo as usize);
        let east: Option<usize> = (hi < m as isize).then_some(hi as usize);
        // letters run 1..n-1, so splits[0] and splits[n] are empty
        let between = |hh: usize| -> Vec<usize> {
            ch.splits[hh]
                .iter()
                .copied()
                .filter(|&p| (p as isize) > lo && (p as isize) < hi)
                .collect()
        };
        let south: Vec<usize> = if h < n { between(h + 1) } else { Vec::new() };
        let north: Vec<usize> = if h >= 1 {
            let mut v = between(h - 1);
            v.reverse();
            v
        } else {
            Vec::new()
        };

        let mut cycle: Vec<usize> = Vec::new();
        if let Some(w) = west {
            cycle.push(w);
        }
        cycle.extend(&south);
        if let Some(e) = east {
            cycle.push(e);
        }
        cycle.extend(&north);

        // anchoring for boundary chambers
        let is_bottom = h == n;
        let is_right = s == ch.splits[h].len() && h < n;
        let is_left = s == 0 && h < n;
        if boundary.contains(name) {
            let anchor: Option<usize> = if is_bottom {
                // arc runs L_n -> R_n; stub after the vertex is at the east
                // end, adjacent to the easternmost north crossing
                north.first().copied()
            } else if is_right {
                // arc runs upward; the stub after sits at the upper endpoint
                // (wire h), adjacent to the easternmost north crossing, or
                // the west-end crossing when the north side is empty
                north.first().copied().or(west)
            } else if is_left {
                // arc runs downward; the stub after sits at the lower
                // endpoint (wire h+1): westernmost south crossing, else the
                // east-end crossing
                south.first().copied().or(east)
            } else {
                None
            };
            if let Some(a) = anchor {
                let p = cycle.iter().position(|&x| x == a).unwrap();
                cycle.rotate_left(p);
            }
        }
        rotation.insert(name.clone(), cycle);
    }

    Ok(PlaneNetwork {
        boundary,
        edges,
        rotation,
    })
}

/// The standard graph on N boundary nodes with unit conductances: the plane
/// network whose medial wiring diagram is `standard_word(N)`.
pub fn standard_graph(n: usize) -> Result<PlaneNetwork> {
    if n < 2 {
        return Err(Error::Size(format!("standard graphs need N >= 2, got {n}")));
    }
    network_from_wiring(&standard_word(n), n)
}

/// Standard graph carrying the given conductances, indexed by medial strand
/// pairs i < j.
pub fn standard_graph_with(
    n: usize,
    gamma: &BTreeMap<(usize, usize), Rational>,
) -> Result<PlaneNetwork> {
    let mut net = standard_graph(n)?;
    let med = medial_of_network(&net)?;
    for (e, crossing) in med.crossing_at_edge.iter().enumerate() {
        let g = gamma.get(&crossing.strands).ok_or_else(|| {
            Error::Argument(format!(
                "missing conductance for strand pair {:?}",
                crossing.strands
            ))
        })?;
        net.edges[e].gamma = g.clone();
    }
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{single_edge, star, triangle};
    use crate::ring::rat;

    #[test]
    fn wiring_121_pinned() {
        let w = wiring_from_word(&[1, 2, 1], 3).unwrap();
        assert_eq!(w.pairs(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            w.colors,
            vec![Color::White, Color::Black, Color::White]
        );
        let single = wiring_from_word(&[1], 2).unwrap();
        assert_eq!(single.pairs(), vec![(1, 2)]);
        assert_eq!(single.colors, vec![Color::White]);
    }

    #[test]
    fn wiring_123121_all_pairs_once() {
        let w = wiring_from_word(&[1, 2, 3, 1, 2, 1], 4).unwrap();
        let pairs = w.pairs();
        assert_eq!(pairs.len(), 6);
        let set: BTreeSet<_> = pairs.iter().collect();
        assert_eq!(set.len(), 6);
        // lexicographic order along the standard word
        assert_eq!(
            pairs,
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn non_reduced_word_rejected() {
        assert!(wiring_from_word(&[1, 1], 2).is_err());
        assert!(wiring_from_word(&[1, 2, 1, 2], 3).is_err());
        assert!(wiring_from_word(&[3], 2).is_err());
    }

    #[test]
    fn standard_words() {
        assert_eq!(standard_word(2), vec![1]);
        assert_eq!(standard_word(3), vec![1, 2, 1]);
        assert_eq!(standard_word(4), vec![1, 2, 3, 1, 2, 1]);
        for n in 2..=7 {
            let w = standard_word(n);
            assert_eq!(w.len(), n * (n - 1) / 2);
            let pairs = WiringDiagram::pairs_of_word(&w, n).unwrap();
            // every pair crosses exactly once, in lexicographic order
            let mut expect = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    expect.push((i, j));
                }
            }
            assert_eq!(pairs, expect);
        }
    }

    #[test]
    fn wiring_text_roundtrip() {
        let w = wiring_from_word(&standard_word(4), 4).unwrap();
        let text = w.to_text();
        assert_eq!(WiringDiagram::parse_text(&text).unwrap(), w);
    }

    #[test]
    fn medial_single_edge() {
        let net = single_edge(rat(1));
        let med = medial_of_network(&net).unwrap();
        assert_eq!(med.strands.len(), 2);
        assert_eq!(med.crossing_at_edge.len(), 1);
        assert_eq!(med.crossing_at_edge[0].strands, (1, 2));
        // the single crossing of the standard 2-node graph is white
        assert_eq!(med.crossing_at_edge[0].color, Color::White);
        let wiring = wiring_from_word(&[1], 2).unwrap();
        assert!(med.diagram.same_diagram(&wiring.strand_diagram()));
    }

    #[test]
    fn medial_triangle_and_star() {
        // three strands, each pair crossing once, perfect matching
        for net in [triangle(rat(1), rat(1), rat(1)), star(rat(1), rat(1), rat(1))] {
            let med = medial_of_network(&net).unwrap();
            assert_eq!(med.strands.len(), 3);
            let mut pairs: Vec<_> = med.crossing_at_edge.iter().map(|c| c.strands).collect();
            pairs.sort();
            assert_eq!(pairs, vec![(1, 2), (1, 3), (2, 3)]);
            // perfect matching on 6 boundary points
            let mut ends = BTreeSet::new();
            for s in &med.strands {
                ends.insert(s.source);
                ends.insert(s.sink);
                assert!(s.source < s.sink);
            }
            assert_eq!(ends.len(), 6);
        }
    }

    #[test]
    fn standard_graph_small() {
        let g2 = standard_graph(2).unwrap();
        assert!(g2.validate().is_empty());
        assert_eq!(g2.edges.len(), 1);
        assert_eq!(g2.boundary.len(), 2);
        assert_eq!(g2.interior_vertices().len(), 0);

        let g3 = standard_graph(3).unwrap();
        assert!(g3.validate().is_empty());
        assert_eq!(g3.edges.len(), 3);
        assert_eq!(g3.boundary.len(), 3);

        let g4 = standard_graph(4).unwrap();
        assert!(g4.validate().is_empty());
        assert_eq!(g4.edges.len(), 6);
        assert_eq!(g4.boundary.len(), 4);

        assert!(standard_graph(1).is_err());
    }

    #[test]
    fn standard_graph_medial_matches_word() {
        for n in 2..=6 {
            let net = standard_graph(n).unwrap();
            let med = medial_of_network(&net).unwrap();
            let wiring = wiring_from_word(&standard_word(n), n).unwrap();
            assert!(
                med.diagram.same_diagram(&wiring.strand_diagram()),
                "standard graph medial mismatch at n={n}:\n medial {:?}\n wiring {:?}",
                med.diagram.canonical_key(),
                wiring.strand_diagram().canonical_key()
            );
        }
    }

    #[test]
    fn diagram_to_word_roundtrip() {
        for n in 2..=6 {
            let w = standard_word(n);
            let d = wiring_from_word(&w, n).unwrap().strand_diagram();
            assert_eq!(d.to_word().unwrap(), w);
        }
    }
}
