//! Plane electrical networks: an embedded graph with an ordered boundary
//! circle, exact conductances, Kirchhoff and response matrices, and the
//! star-triangle move.
//!
//! The combinatorial embedding is a rotation system: for every vertex, the
//! clockwise cyclic order of its incident edges. Rotations of boundary
//! vertices are anchored, not cyclic: the list starts with the edge met
//! first when sweeping clockwise from the boundary arc that follows the
//! vertex, so the medial construction can attach its boundary stubs without
//! any geometry.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::ring::{parse_rational_at, Rational};

pub type VertexId = String;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub gamma: Rational,
}

impl Edge {
    pub fn other(&self, w: &str) -> &VertexId {
        if self.u == w {
            &self.v
        } else {
            &self.u
        }
    }

    pub fn touches(&self, w: &str) -> bool {
        self.u == w || self.v == w
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneNetwork {
    /// Boundary vertices in clockwise circle order.
    pub boundary: Vec<VertexId>,
    pub edges: Vec<Edge>,
    /// Vertex -> clockwise list of incident edge indices. Interior vertices:
    /// cyclic. Boundary vertices: anchored at the boundary arc.
    pub rotation: BTreeMap<VertexId, Vec<usize>>,
}

/// Where a star-triangle move is applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MutationSite {
    /// An interior vertex of degree exactly 3; replaced by a triangle.
    StarCenter(VertexId),
    /// A triangular face given by its three vertices; replaced by a star
    /// with one new interior vertex.
    TriangleFace([VertexId; 3]),
}

impl PlaneNetwork {
    pub fn vertices(&self) -> Vec<VertexId> {
        self.rotation.keys().cloned().collect()
    }

    pub fn interior_vertices(&self) -> Vec<VertexId> {
        let bset: BTreeSet<_> = self.boundary.iter().collect();
        self.rotation
            .keys()
            .filter(|v| !bset.contains(v))
            .cloned()
            .collect()
    }

    pub fn degree(&self, v: &str) -> usize {
        self.rotation.get(v).map_or(0, |r| r.len())
    }

    pub fn is_boundary(&self, v: &str) -> bool {
        self.boundary.iter().any(|b| b == v)
    }

    /// All invariant violations, as human-readable strings. Empty iff valid.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let verts: BTreeSet<&VertexId> = self.rotation.keys().collect();

        let mut seen = BTreeSet::new();
        for b in &self.boundary {
            if !seen.insert(b) {
                out.push(format!("boundary vertex {b} listed twice"));
            }
            if !verts.contains(b) {
                out.push(format!("boundary vertex {b} has no rotation entry"));
            }
        }
        if self.boundary.is_empty() {
            out.push("no boundary vertices".into());
        }

        for (k, e) in self.edges.iter().enumerate() {
            if e.u == e.v {
                out.push(format!("self-loop at {}", e.u));
            }
            if e.gamma.is_zero() {
                out.push(format!("zero conductance on edge {k} ({}-{})", e.u, e.v));
            }
            for end in [&e.u, &e.v] {
                if !verts.contains(end) {
                    out.push(format!("edge {k} endpoint {end} has no rotation entry"));
                }
            }
        }

        // rotation lists each incident edge exactly once per endpoint
        for (v, rot) in &self.rotation {
            let incident: BTreeSet<usize> = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.touches(v))
                .map(|(k, _)| k)
                .collect();
            let listed: BTreeSet<usize> = rot.iter().copied().collect();
            if listed.len() != rot.len() {
                out.push(format!("rotation at {v} repeats an edge"));
            }
            if listed != incident {
                out.push(format!("rotation at {v} does not list its incident edges"));
            }
        }

        if !self.is_connected() {
            out.push("not connected".into());
        }
        out
    }

    fn is_connected(&self) -> bool {
        let verts: Vec<&VertexId> = self.rotation.keys().collect();
        if verts.is_empty() {
            return false;
        }
        let mut seen: BTreeSet<&VertexId> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(verts[0]);
        queue.push_back(verts[0]);
        while let Some(v) = queue.pop_front() {
            for e in &self.edges {
                if e.touches(v) {
                    let w = e.other(v);
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
        }
        seen.len() == verts.len()
    }

    /// Kirchhoff matrix (weighted Laplacian) in the given vertex order.
    /// `order` must enumerate every vertex exactly once, boundary first.
    pub fn kirchhoff(&self, order: &[VertexId]) -> Result<QMatrix> {
        let verts: BTreeSet<&VertexId> = self.rotation.keys().collect();
        let given: BTreeSet<&VertexId> = order.iter().collect();
        if given.len() != order.len() || given != verts {
            return Err(Error::Argument(
                "kirchhoff order must be a permutation of the vertices".into(),
            ));
        }
        for (i, b) in self.boundary.iter().enumerate() {
            if order.get(i) != Some(b) {
                return Err(Error::Argument(
                    "kirchhoff order must list the boundary first, in circle order".into(),
                ));
            }
        }
        let index: BTreeMap<&VertexId, usize> =
            order.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let n = order.len();
        let mut k = QMatrix::zero(n, n);
        for e in &self.edges {
            let i = index[&e.u];
            let j = index[&e.v];
            k[(i, j)] = k[(i, j)].clone() - e.gamma.clone();
            k[(j, i)] = k[(j, i)].clone() - e.gamma.clone();
            k[(i, i)] = k[(i, i)].clone() + e.gamma.clone();
            k[(j, j)] = k[(j, j)].clone() + e.gamma.clone();
        }
        Ok(k)
    }

    /// Canonical vertex order: boundary in circle order, then interior
    /// vertices sorted by id.
    pub fn canonical_order(&self) -> Vec<VertexId> {
        let mut order = self.boundary.clone();
        order.extend(self.interior_vertices());
        order
    }

    /// Response matrix: Schur complement of the Kirchhoff matrix onto the
    /// boundary block. Errors if the interior block is singular (possible
    /// for signed conductances: a degenerate chart point).
    pub fn response(&self) -> Result<QMatrix> {
        let order = self.canonical_order();
        let k = self.kirchhoff(&order)?;
        let keep: Vec<usize> = (0..self.boundary.len()).collect();
        k.schur_complement(&keep)
    }

    /// Star-triangle move. Conductances follow the pairing in which each star
    /// edge is matched with the opposite triangle edge:
    ///   triangle -> star:  s_i = (t1 t2 + t1 t3 + t2 t3) / t_i
    ///   star -> triangle:  t_i = (s1 s2 s3 / (s1+s2+s3)) / s_i
    /// so the two directions are mutually inverse and the response matrix is
    /// unchanged (asserted in debug builds when both responses exist).
    pub fn star_triangle_mutate(&self, site: &MutationSite) -> Result<PlaneNetwork> {
        let out = match site {
            MutationSite::StarCenter(w) => self.star_to_triangle(w)?,
            MutationSite::TriangleFace(vs) => self.triangle_to_star(vs)?,
        };
        #[cfg(debug_assertions)]
        {
            if let (Ok(a), Ok(b)) = (self.response(), out.response()) {
                debug_assert_eq!(a, b, "star-triangle move changed the response matrix");
            }
        }
        Ok(out)
    }

    fn star_to_triangle(&self, w: &str) -> Result<PlaneNetwork> {
        if self.is_boundary(w) {
            return Err(Error::Argument(format!("{w} is a boundary vertex")));
        }
        let rot_w = self
            .rotation
            .get(w)
            .ok_or_else(|| Error::Argument(format!("no vertex {w}")))?;
        if rot_w.len() != 3 {
            return Err(Error::Argument(format!(
                "{w} has degree {}, star-triangle needs degree 3",
                rot_w.len()
            )));
        }
        // neighbours in clockwise order around w
        let star_edges: Vec<usize> = rot_w.clone();
        let nbrs: Vec<VertexId> = star_edges
            .iter()
            .map(|&k| self.edges[k].other(w).clone())
            .collect();
        if nbrs[0] == nbrs[1] || nbrs[1] == nbrs[2] || nbrs[0] == nbrs[2] {
            return Err(Error::Argument(
                "star-triangle needs three distinct neighbours".into(),
            ));
        }
        let s: Vec<Rational> = star_edges
            .iter()
            .map(|&k| self.edges[k].gamma.clone())
            .collect();
        let total = s[0].clone() + s[1].clone() + s[2].clone();
        if total.is_zero() {
            return Err(Error::Degenerate("s1 + s2 + s3".into()));
        }
        let prod_over_sum = s[0].clone() * s[1].clone() * s[2].clone() / total;
        // triangle edge opposite neighbour i
        let t: Vec<Rational> = (0..3)
            .map(|i| prod_over_sum.clone() / s[i].clone())
            .collect();

        // rebuild: drop w and its edges, append the triangle edges
        let mut new_edges: Vec<Edge> = Vec::new();
        let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
        for (k, e) in self.edges.iter().enumerate() {
            if !e.touches(w) {
                remap.insert(k, new_edges.len());
                new_edges.push(e.clone());
            }
        }
        // edge opposite nbrs[i] joins nbrs[i+1], nbrs[i+2] (indices mod 3,
        // following w's clockwise rotation)
        let mut tri_idx = [0usize; 3];
        for i in 0..3 {
            let a = (i + 1) % 3;
            let b = (i + 2) % 3;
            tri_idx[i] = new_edges.len();
            new_edges.push(Edge {
                u: nbrs[a].clone(),
                v: nbrs[b].clone(),
                gamma: t[i].clone(),
            });
        }

        let mut new_rotation: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (v, rot) in &self.rotation {
            if v == w {
                continue;
            }
            let mut list = Vec::new();
            for &k in rot {
                if let Some(&nk) = remap.get(&k) {
                    list.push(nk);
                } else if self.edges[k].touches(w) && self.edges[k].touches(v) {
                    // v = nbrs[i]; the removed spoke's slot receives the two
                    // triangle edges toward nbrs[i+1] then nbrs[i+2], in
                    // clockwise order at v
                    let i = nbrs.iter().position(|x| x == v).unwrap();
                    let a = (i + 1) % 3; // opposite edge index for nbr a is.. edge toward nbrs[a]
                    let b = (i + 2) % 3;
                    // edge v-nbrs[a] is the one opposite nbrs[b], and vice versa
                    list.push(tri_idx[b]);
                    list.push(tri_idx[a]);
                }
            }
            new_rotation.insert(v.clone(), list);
        }

        Ok(PlaneNetwork {
            boundary: self.boundary.clone(),
            edges: new_edges,
            rotation: new_rotation,
        })
    }

    fn triangle_to_star(&self, corners: &[VertexId; 3]) -> Result<PlaneNetwork> {
        // locate the inner face with exactly these corners
        let face = self
            .inner_faces()
            .into_iter()
            .find(|f| {
                f.len() == 3 && {
                    let set: BTreeSet<&VertexId> = f.iter().map(|(v, _)| v).collect();
                    corners.iter().all(|c| set.contains(c))
                }
            })
            .ok_or_else(|| {
                Error::Argument(format!(
                    "no inner triangular face on {}, {}, {}",
                    corners[0], corners[1], corners[2]
                ))
            })?;

        // face is a list of (vertex, edge leaving it along the face);
        // vertices appear in the face-tracing order
        let vs: Vec<VertexId> = face.iter().map(|(v, _)| v.clone()).collect();
        let tri_edge_of: BTreeMap<&VertexId, usize> =
            face.iter().map(|(v, e)| (v, *e)).collect();
        // t[i] = conductance of the triangle edge opposite vs[i] = the face
        // edge not incident to vs[i]
        let opposite = |i: usize| -> usize {
            let v = &vs[i];
            *face
                .iter()
                .find(|(w, e)| w != v && !self.edges[*e].touches(v))
                .map(|(_, e)| e)
                .unwrap()
        };
        let t: Vec<Rational> = (0..3)
            .map(|i| self.edges[opposite(i)].gamma.clone())
            .collect();
        for (i, ti) in t.iter().enumerate() {
            if ti.is_zero() {
                return Err(Error::Degenerate(format!("triangle conductance t{}", i + 1)));
            }
        }
        let pair_sum = t[0].clone() * t[1].clone()
            + t[0].clone() * t[2].clone()
            + t[1].clone() * t[2].clone();
        if pair_sum.is_zero() {
            return Err(Error::Degenerate("t1 t2 + t1 t3 + t2 t3".into()));
        }
        let s: Vec<Rational> = (0..3).map(|i| pair_sum.clone() / t[i].clone()).collect();

        // fresh interior vertex id
        let mut w = "w".to_string();
        let mut counter = 0;
        while self.rotation.contains_key(&w) {
            counter += 1;
            w = format!("w{counter}");
        }

        let tri_edges: BTreeSet<usize> = face.iter().map(|(_, e)| *e).collect();
        let mut new_edges: Vec<Edge> = Vec::new();
        let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
        for (k, e) in self.edges.iter().enumerate() {
            if !tri_edges.contains(&k) {
                remap.insert(k, new_edges.len());
                new_edges.push(e.clone());
            }
        }
        let mut spoke_idx: BTreeMap<&VertexId, usize> = BTreeMap::new();
        for (i, v) in vs.iter().enumerate() {
            spoke_idx.insert(v, new_edges.len());
            new_edges.push(Edge {
                u: v.clone(),
                v: w.clone(),
                gamma: s[i].clone(),
            });
        }

        // At each corner the two face edges are adjacent in the rotation
        // (they bound the face); replace the pair by the spoke. The face was
        // traced so that at vs[i] the face-leaving edge tri_edge_of[vs[i]]
        // directly follows the face-arriving edge in clockwise order.
        let mut new_rotation: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (v, rot) in &self.rotation {
            let mut list = Vec::new();
            if let Some(&spoke) = spoke_idx.get(v) {
                let leave = tri_edge_of[v];
                let d = rot.len();
                let pos = rot.iter().position(|&k| k == leave).unwrap();
                // the arriving face edge sits right before `leave`
                let mut k = pos;
                list.push(spoke);
                loop {
                    k = (k + 1) % d;
                    let e = rot[k];
                    if tri_edges.contains(&e) {
                        break;
                    }
                    list.push(remap[&e]);
                }
                // rotate so boundary anchoring is preserved: keep the same
                // starting edge if it survived
                if self.is_boundary(v) {
                    let anchor = rot.iter().find(|k| !tri_edges.contains(k));
                    if let Some(&a) = anchor {
                        if rot[0] == a {
                            let p = list.iter().position(|&x| x == remap[&a]).unwrap();
                            list.rotate_left(p);
                        }
                    }
                }
            } else {
                for &k in rot {
                    list.push(remap[&k]);
                }
            }
            new_rotation.insert(v.clone(), list);
        }
        // rotation at w follows the face-trace order, which is the clockwise
        // order of the corners around the new star
        new_rotation.insert(w.clone(), vs.iter().map(|v| spoke_idx[v]).collect());

        Ok(PlaneNetwork {
            boundary: self.boundary.clone(),
            edges: new_edges,
            rotation: new_rotation,
        })
    }

    /// Faces of the embedding as orbits of directed edges, inner faces only
    /// (orbits that never take the boundary wrap from a vertex's last edge
    /// back to its first belong to the outer region). Each face is returned
    /// as (vertex, edge leaving that vertex along the face) pairs.
    pub fn inner_faces(&self) -> Vec<Vec<(VertexId, usize)>> {
        let mut faces = Vec::new();
        let mut visited: BTreeSet<(usize, bool)> = BTreeSet::new(); // (edge, from_u)
        for start_edge in 0..self.edges.len() {
            for start_from_u in [true, false] {
                if visited.contains(&(start_edge, start_from_u)) {
                    continue;
                }
                let mut orbit = Vec::new();
                let mut wrapped = false;
                let (mut e, mut from_u) = (start_edge, start_from_u);
                loop {
                    if !visited.insert((e, from_u)) {
                        break;
                    }
                    let tail = if from_u {
                        self.edges[e].u.clone()
                    } else {
                        self.edges[e].v.clone()
                    };
                    orbit.push((tail.clone(), e));
                    // arrive at head, leave via the successor of e there
                    let head = self.edges[e].other(&tail).clone();
                    let rot = &self.rotation[&head];
                    let pos = rot.iter().position(|&k| k == e).unwrap();
                    let next_pos = (pos + 1) % rot.len();
                    if next_pos == 0 && self.is_boundary(&head) {
                        wrapped = true;
                    }
                    let ne = rot[next_pos];
                    e = ne;
                    from_u = self.edges[ne].u == head;
                    if (e, from_u) == (start_edge, start_from_u) {
                        break;
                    }
                }
                if !wrapped && !orbit.is_empty() {
                    faces.push(orbit);
                }
            }
        }
        faces
    }

    // -- text format --------------------------------------------------------

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("boundary");
        for b in &self.boundary {
            out.push(' ');
            out.push_str(b);
        }
        out.push('\n');
        for e in &self.edges {
            out.push_str(&format!("edge {} {} {}\n", e.u, e.v, e.gamma));
        }
        let interior = self.interior_vertices();
        for v in self.boundary.iter().chain(interior.iter()) {
            let rot: Vec<String> = self.rotation[v].iter().map(|k| k.to_string()).collect();
            out.push_str(&format!("rotation {} {}\n", v, rot.join(" ")));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<PlaneNetwork> {
        let mut boundary: Option<Vec<VertexId>> = None;
        let mut edges: Vec<Edge> = Vec::new();
        let mut rotation: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse_err = |msg: &str| Error::Parse {
                line: ln + 1,
                col: 1,
                msg: msg.to_string(),
            };
            match parts.next() {
                Some("boundary") => {
                    let ids: Vec<VertexId> = parts.map(|s| s.to_string()).collect();
                    if ids.is_empty() {
                        return Err(parse_err("boundary line needs at least one id"));
                    }
                    boundary = Some(ids);
                }
                Some("edge") => {
                    let u = parts.next().ok_or_else(|| parse_err("edge needs u"))?;
                    let v = parts.next().ok_or_else(|| parse_err("edge needs v"))?;
                    let g = parts.next().ok_or_else(|| parse_err("edge needs gamma"))?;
                    if parts.next().is_some() {
                        return Err(parse_err("trailing tokens on edge line"));
                    }
                    let col = raw.find(g).map(|c| c + 1).unwrap_or(1);
                    edges.push(Edge {
                        u: u.to_string(),
                        v: v.to_string(),
                        gamma: parse_rational_at(g, ln + 1, col)?,
                    });
                }
                Some("rotation") => {
                    let v = parts.next().ok_or_else(|| parse_err("rotation needs a vertex"))?;
                    let mut list = Vec::new();
                    for tok in parts {
                        let k: usize = tok
                            .parse()
                            .map_err(|_| parse_err("rotation entries must be edge indices"))?;
                        list.push(k);
                    }
                    if rotation.insert(v.to_string(), list).is_some() {
                        return Err(parse_err("duplicate rotation line"));
                    }
                }
                Some(other) => {
                    return Err(parse_err(&format!("unknown directive {other}")));
                }
                None => unreachable!(),
            }
        }
        let boundary = boundary.ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: "missing boundary line".into(),
        })?;
        for e in &edges {
            if e.gamma.is_zero() {
                return Err(Error::Parameter(format!(
                    "zero conductance on edge {}-{}",
                    e.u, e.v
                )));
            }
        }
        let net = PlaneNetwork {
            boundary,
            edges,
            rotation,
        };
        Ok(net)
    }
}

/// Triangle on three boundary vertices b1, b2, b3 (clockwise), edges in the
/// order (b1-b2, b2-b3, b1-b3).
pub fn triangle(g12: Rational, g23: Rational, g13: Rational) -> PlaneNetwork {
    let b = |i: usize| format!("b{i}");
    let mut rotation = BTreeMap::new();
    rotation.insert(b(1), vec![0, 2]);
    rotation.insert(b(2), vec![1, 0]);
    rotation.insert(b(3), vec![2, 1]);
    PlaneNetwork {
        boundary: vec![b(1), b(2), b(3)],
        edges: vec![
            Edge { u: b(1), v: b(2), gamma: g12 },
            Edge { u: b(2), v: b(3), gamma: g23 },
            Edge { u: b(1), v: b(3), gamma: g13 },
        ],
        rotation,
    }
}

/// Star: boundary b1, b2, b3 (clockwise) joined to an interior center w,
/// spokes in the order (b1-w, b2-w, b3-w).
pub fn star(s1: Rational, s2: Rational, s3: Rational) -> PlaneNetwork {
    let b = |i: usize| format!("b{i}");
    let mut rotation = BTreeMap::new();
    rotation.insert(b(1), vec![0]);
    rotation.insert(b(2), vec![1]);
    rotation.insert(b(3), vec![2]);
    rotation.insert("w".to_string(), vec![0, 1, 2]);
    PlaneNetwork {
        boundary: vec![b(1), b(2), b(3)],
        edges: vec![
            Edge { u: b(1), v: "w".into(), gamma: s1 },
            Edge { u: b(2), v: "w".into(), gamma: s2 },
            Edge { u: b(3), v: "w".into(), gamma: s3 },
        ],
        rotation,
    }
}

/// Single edge between two boundary vertices.
pub fn single_edge(gamma: Rational) -> PlaneNetwork {
    let mut rotation = BTreeMap::new();
    rotation.insert("b1".to_string(), vec![0]);
    rotation.insert("b2".to_string(), vec![0]);
    PlaneNetwork {
        boundary: vec!["b1".into(), "b2".into()],
        edges: vec![Edge { u: "b1".into(), v: "b2".into(), gamma }],
        rotation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn qm(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn kirchhoff_pinned() {
        let net = single_edge(rat(5));
        let k = net.kirchhoff(&net.canonical_order()).unwrap();
        assert_eq!(k, qm(&[&[5, -5], &[-5, 5]]));

        let tri = triangle(rat(1), rat(1), rat(1));
        let k = tri.kirchhoff(&tri.canonical_order()).unwrap();
        assert_eq!(k, qm(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]));

        let st = star(rat(3), rat(3), rat(3));
        let k = st.kirchhoff(&st.canonical_order()).unwrap();
        assert_eq!(
            k,
            qm(&[
                &[3, 0, 0, -3],
                &[0, 3, 0, -3],
                &[0, 0, 3, -3],
                &[-3, -3, -3, 9]
            ])
        );
    }

    #[test]
    fn kirchhoff_rejects_bad_order() {
        let tri = triangle(rat(1), rat(1), rat(1));
        let mut order = tri.canonical_order();
        order.swap(0, 1);
        assert!(matches!(tri.kirchhoff(&order), Err(Error::Argument(_))));
    }

    #[test]
    fn response_pinned() {
        let tri = triangle(rat(1), rat(1), rat(1));
        let expect = qm(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert_eq!(tri.response().unwrap(), expect);
        let st = star(rat(3), rat(3), rat(3));
        assert_eq!(st.response().unwrap(), expect);
        assert_eq!(single_edge(rat(7)).response().unwrap(), qm(&[&[7, -7], &[-7, 7]]));
    }

    #[test]
    fn validate_reports_violations() {
        let tri = triangle(rat(1), rat(1), rat(1));
        assert!(tri.validate().is_empty());

        let mut looped = tri.clone();
        looped.edges[0].v = looped.edges[0].u.clone();
        assert!(looped.validate().iter().any(|s| s.contains("self-loop")));

        let mut disc = tri.clone();
        disc.edges.clear();
        for (_, rot) in disc.rotation.iter_mut() {
            rot.clear();
        }
        assert!(disc.validate().iter().any(|s| s == "not connected"));
    }

    #[test]
    fn star_triangle_roundtrip_exact() {
        let tri = triangle(rat(1), rat(1), rat(1));
        let st = tri
            .star_triangle_mutate(&MutationSite::TriangleFace([
                "b1".into(),
                "b2".into(),
                "b3".into(),
            ]))
            .unwrap();
        assert_eq!(st.interior_vertices().len(), 1);
        // all new spokes have conductance 3
        for e in &st.edges {
            assert_eq!(e.gamma, rat(3));
        }
        assert_eq!(st.response().unwrap(), tri.response().unwrap());

        let w = st.interior_vertices()[0].clone();
        let back = st.star_triangle_mutate(&MutationSite::StarCenter(w)).unwrap();
        assert_eq!(back.response().unwrap(), tri.response().unwrap());
        // exact conductance restoration
        let mut gammas: Vec<Rational> = back.edges.iter().map(|e| e.gamma.clone()).collect();
        gammas.sort();
        assert_eq!(gammas, vec![rat(1), rat(1), rat(1)]);
    }

    #[test]
    fn star_triangle_response_invariance_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let g = |rng: &mut rand_chacha::ChaCha8Rng| {
                crate::ring::ratio(rng.gen_range(1..20), rng.gen_range(1..20))
            };
            let st = star(g(&mut rng), g(&mut rng), g(&mut rng));
            let w = st.interior_vertices()[0].clone();
            let tri = st.star_triangle_mutate(&MutationSite::StarCenter(w.clone())).unwrap();
            assert_eq!(tri.response().unwrap(), st.response().unwrap());
            // and back, exactly
            let back = tri
                .star_triangle_mutate(&MutationSite::TriangleFace([
                    "b1".into(),
                    "b2".into(),
                    "b3".into(),
                ]))
                .unwrap();
            let mut a: Vec<Rational> = st.edges.iter().map(|e| e.gamma.clone()).collect();
            let mut b: Vec<Rational> = back.edges.iter().map(|e| e.gamma.clone()).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn mutate_rejects_bad_sites() {
        let tri = triangle(rat(1), rat(1), rat(1));
        assert!(tri
            .star_triangle_mutate(&MutationSite::StarCenter("b1".into()))
            .is_err());
        let st = star(rat(1), rat(1), rat(1));
        assert!(st
            .star_triangle_mutate(&MutationSite::TriangleFace([
                "b1".into(),
                "b2".into(),
                "b3".into()
            ]))
            .is_err());
    }

    #[test]
    fn network_text_roundtrip() {
        let st = star(rat(3), crate::ring::ratio(1, 2), rat(-5));
        let text = st.to_text();
        let parsed = PlaneNetwork::parse_text(&text).unwrap();
        assert_eq!(parsed, st);
        assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn kirchhoff_symmetric_zero_row_sums_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = |rng: &mut rand_chacha::ChaCha8Rng| {
                crate::ring::ratio(rng.gen_range(1..30), rng.gen_range(1..10))
            };
            let tri = triangle(g(&mut rng), g(&mut rng), g(&mut rng));
            let k = tri.kirchhoff(&tri.canonical_order()).unwrap();
            assert!(k.is_symmetric());
            assert!(k.row_sums().iter().all(|s| s.is_zero()));
            let m = tri.response().unwrap();
            assert!(m.is_symmetric());
            assert!(m.row_sums().iter().all(|s| s.is_zero()));
            assert!(m.column_sums().iter().all(|s| s.is_zero()));
            assert_eq!(m.rank(), 2); // singular
        }
    }
}
