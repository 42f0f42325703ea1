//! Exact Gale diagrams for excess 2.
//!
//! Points sit on `2m` abstract, equally spaced rays around a circle, or at
//! the center. Ray `i` has antipode `i + m`. Whether a set of at most three
//! points captures the origin depends only on this cyclic structure, so no
//! coordinates are needed.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Check, FaceLattice, ValidationReport, Violation};
use crate::shadow::Shadow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Position {
    Ray(u32),
    Center,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Ray(r) => write!(f, "{r}"),
            Position::Center => write!(f, "C"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleDiagram {
    order: u32,
    labels: Vec<String>,
    points: Vec<Position>,
}

impl GaleDiagram {
    pub fn new(order: u32, labels: Vec<String>, points: Vec<Position>) -> Result<GaleDiagram> {
        if order < 2 || !order.is_multiple_of(2) {
            return Err(Error::InvalidDiagram(format!(
                "ray count {order} must be even and positive"
            )));
        }
        if labels.len() != points.len() {
            return Err(Error::InvalidDiagram(format!(
                "{} labels for {} points",
                labels.len(),
                points.len()
            )));
        }
        if labels.is_empty() || labels.len() > 64 {
            return Err(Error::InvalidDiagram(format!("{} points", labels.len())));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || labels[..i].contains(l) {
                return Err(Error::InvalidDiagram(format!(
                    "label {l:?} is empty or repeated"
                )));
            }
        }
        if let Some(Position::Ray(r)) = points
            .iter()
            .find(|p| matches!(p, Position::Ray(r) if *r >= order))
        {
            return Err(Error::InvalidDiagram(format!(
                "ray {r} out of range 0..{order}"
            )));
        }
        Ok(GaleDiagram {
            order,
            labels,
            points,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn half(&self) -> u32 {
        self.order / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn points(&self) -> &[Position] {
        &self.points
    }

    pub fn position(&self, v: usize) -> Position {
        self.points[v]
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn antipode(&self, ray: u32) -> u32 {
        (ray + self.half()) % self.order
    }

    /// Number of ray points strictly inside the arc walked forward from
    /// `from` to `to`.
    fn count_open_arc(&self, from: u32, to: u32) -> usize {
        let len = (to + self.order - from) % self.order;
        self.points
            .iter()
            .filter(|p| match p {
                Position::Ray(r) => {
                    let off = (r + self.order - from) % self.order;
                    off > 0 && off < len
                }
                Position::Center => false,
            })
            .count()
    }

    fn on_ray(&self, ray: u32) -> Shadow {
        Shadow::from_indices(
            self.points
                .iter()
                .enumerate()
                .filter(|(_, p)| **p == Position::Ray(ray))
                .map(|(v, _)| v),
        )
    }
}

/// Every line through the origin and a point must leave at least two points
/// strictly on each side.
pub fn gale_validate(g: &GaleDiagram) -> ValidationReport {
    let m = g.half();
    let mut violations = Vec::new();
    for line in 0..m {
        let witnesses = g.on_ray(line).union(g.on_ray(line + m));
        if witnesses.is_empty() {
            continue;
        }
        for (from, to) in [(line, line + m), (line + m, line)] {
            let count = g.count_open_arc(from, to % g.order);
            if count < 2 {
                violations.push(Violation {
                    check: Check::Hemisphere,
                    witnesses: vec![witnesses],
                    detail: format!(
                        "open side from ray {from} to ray {} holds {count} points",
                        to % g.order
                    ),
                });
            }
        }
    }
    ValidationReport::from_violations(violations)
}

fn pair_is_cofacet(a: Position, b: Position, order: u32) -> bool {
    match (a, b) {
        (Position::Ray(x), Position::Ray(y)) => (x + order / 2) % order == y,
        _ => false,
    }
}

fn triple_is_cofacet(a: Position, b: Position, c: Position, order: u32) -> bool {
    let (Position::Ray(x), Position::Ray(y), Position::Ray(z)) = (a, b, c) else {
        return false;
    };
    let mut r = [x, y, z];
    r.sort_unstable();
    let m = order / 2;
    let gaps = [r[1] - r[0], r[2] - r[1], order - r[2] + r[0]];
    // Distinct rays give non-zero gaps; a gap below m on every side also rules
    // out antipodal pairs.
    gaps.iter().all(|&gap| gap > 0 && gap < m)
}

fn subset_is_cofacet(points: &[Position], set: Shadow, order: u32) -> bool {
    let v = set.to_vec();
    match v.len() {
        1 => points[v[0]] == Position::Center,
        2 => pair_is_cofacet(points[v[0]], points[v[1]], order),
        3 => triple_is_cofacet(points[v[0]], points[v[1]], points[v[2]], order),
        _ => false,
    }
}

/// Vertex sets whose complement is a facet, in lexicographic order: center
/// points, antipodal pairs, and triples on distinct rays whose cyclic gaps
/// are all below a half turn.
pub fn cofacets(g: &GaleDiagram) -> Vec<Shadow> {
    let n = g.n();
    let mut out: Vec<Shadow> = Vec::new();
    for s in Shadow::full(n).subsets() {
        if (1..=3).contains(&s.len()) && subset_is_cofacet(&g.points, s, g.order) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

/// The sphere whose facets are the complements of the co-facets.
pub fn sphere_from_diagram(g: &GaleDiagram) -> Result<FaceLattice> {
    let report = gale_validate(g);
    if !report.verdict {
        return Err(Error::InvalidDiagram(report.violations[0].detail.clone()));
    }
    let full = Shadow::full(g.n());
    let facets: Vec<Shadow> = cofacets(g).iter().map(|c| full.difference(*c)).collect();
    let l = FaceLattice::from_facet_intersections(g.labels.clone(), facets)
        .map_err(|e| Error::DegenerateDiagram(e.to_string()))?;
    let report = l.validate();
    if !report.verdict {
        return Err(Error::DegenerateDiagram(format!(
            "{} violations, first: {} at {:?}",
            report.violations.len(),
            report.violations[0].check,
            report.violations[0].witnesses
        )));
    }
    Ok(l)
}

/// Move vertex `v` to ray `target`. Allowed when the shorter closed arc
/// between the antipodes of the old and new rays holds no point; the
/// resulting sphere is then isomorphic to the original.
pub fn shift_point(g: &GaleDiagram, v: usize, target: u32) -> Result<GaleDiagram> {
    if v >= g.n() {
        return Err(Error::InvalidDiagram(format!("no vertex {v}")));
    }
    if target >= g.order {
        return Err(Error::InvalidDiagram(format!(
            "ray {target} out of range 0..{}",
            g.order
        )));
    }
    let Position::Ray(current) = g.points[v] else {
        return Err(Error::InvalidDiagram(format!(
            "{} is at the center",
            g.labels[v]
        )));
    };
    if current == target {
        return Ok(g.clone());
    }
    let (a, b) = (g.antipode(current), g.antipode(target));
    let forward = (b + g.order - a) % g.order;
    // Walk the shorter way; a half turn has no shorter side and the walk then
    // passes over `v` itself, which blocks it.
    let (start, len) = if forward <= g.half() {
        (a, forward)
    } else {
        (b, g.order - forward)
    };
    let mut blocking: Vec<u32> = g
        .points
        .iter()
        .filter_map(|p| match p {
            Position::Ray(r) if (r + g.order - start) % g.order <= len => Some(*r),
            _ => None,
        })
        .collect();
    blocking.sort_unstable();
    blocking.dedup();
    if !blocking.is_empty() {
        return Err(Error::BlockedShift { blocking });
    }
    let mut out = g.clone();
    out.points[v] = Position::Ray(target);
    Ok(out)
}

/// A face `τ` with one vertex more than its rank whose boundary is the join
/// of the standard spheres on `a` and `b`. `a` holds the lowest vertex of `τ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinFace {
    pub face: Shadow,
    pub a: Shadow,
    pub b: Shadow,
}

fn check_excess2_no_wide_facet(l: &FaceLattice) -> Result<()> {
    if l.excess() != 2 {
        return Err(Error::PreconditionFailed(format!(
            "excess is {}, not 2",
            l.excess()
        )));
    }
    let d = l.dim();
    if l.facets().iter().any(|f| f.shadow.len() as i32 == d + 3) {
        return Err(Error::PreconditionFailed(format!(
            "a facet has {} vertices",
            d + 3
        )));
    }
    Ok(())
}

/// Minimal subsets of `within` that are not faces of `l`, where `within`
/// itself counts as a non-face.
fn minimal_non_faces(within: Shadow, is_face: impl Fn(Shadow) -> bool) -> Vec<Shadow> {
    let mut subsets: Vec<Shadow> = within.subsets().collect();
    subsets.sort_unstable_by_key(|s| (s.len(), s.bits()));
    let mut out = Vec::new();
    for s in subsets {
        let face = s != within && is_face(s);
        if !face
            && s.iter().all(|v| {
                let t = s.without(v);
                t != within && is_face(t)
            })
        {
            out.push(s);
        }
    }
    out
}

/// All join faces of an excess-2 lattice with no facet on `d + 3` vertices.
pub fn find_join_faces(l: &FaceLattice) -> Result<Vec<JoinFace>> {
    check_excess2_no_wide_facet(l)?;
    let mut out = Vec::new();
    for (i, tau) in l.faces().iter().enumerate() {
        if tau.rank < 3 || tau.shadow.len() != tau.rank as usize + 1 || i == l.face_count() - 1 {
            continue;
        }
        let simplicial_boundary = l
            .faces_below(i)
            .iter()
            .all(|&j| l.face(j as usize).shadow.len() == l.face(j as usize).rank as usize);
        if !simplicial_boundary {
            continue;
        }
        let mnf = minimal_non_faces(tau.shadow, |s| l.contains(s));
        if mnf.len() == 2
            && mnf[0].is_disjoint(mnf[1])
            && mnf[0].union(mnf[1]) == tau.shadow
            && mnf.iter().all(|p| p.len() >= 2)
        {
            let low = tau.shadow.first().expect("non-empty face");
            let (a, b) = if mnf[0].contains(low) {
                (mnf[0], mnf[1])
            } else {
                (mnf[1], mnf[0])
            };
            out.push(JoinFace {
                face: tau.shadow,
                a,
                b,
            });
        }
    }
    Ok(out)
}

/// The two standard spheres whose join is the link of a join face, as vertex
/// sets `(R, S)` with `#R >= #S`. An empty set stands for a sphere of
/// dimension -1 and for the link of a facet.
pub fn link_spheres(l: &FaceLattice, jf: &JoinFace) -> Result<(Shadow, Shadow)> {
    let tau = l.face_of(jf.face)?;
    let i = l.index_of(jf.face).expect("checked above");
    if tau.rank == l.top().rank - 1 {
        return Ok((Shadow::EMPTY, Shadow::EMPTY));
    }
    let mut added = Shadow::EMPTY;
    for &c in l.covers_above(i) {
        let extra = l.face(c as usize).shadow.difference(tau.shadow);
        if extra.len() != 1 {
            return Err(Error::PreconditionFailed(
                "the link is not simplicial".into(),
            ));
        }
        added = added.union(extra);
    }
    let is_link_face = |s: Shadow| {
        l.face_of(s.union(tau.shadow))
            .map(|f| f.rank as usize == tau.rank as usize + s.len())
            .unwrap_or(false)
    };
    let mnf = minimal_non_faces(added, is_link_face);
    let (r, s) = match mnf.as_slice() {
        [w] if *w == added => (added, Shadow::EMPTY),
        [p, q] if p.is_disjoint(*q) && p.union(*q) == added => {
            if p.len() >= q.len() {
                (*p, *q)
            } else {
                (*q, *p)
            }
        }
        _ => {
            return Err(Error::PreconditionFailed(
                "the link is not a join of two standard spheres".into(),
            ))
        }
    };
    Ok((r, s))
}

fn choices(set: Shadow) -> Vec<Shadow> {
    if set.is_empty() {
        vec![Shadow::EMPTY]
    } else {
        set.iter().map(|v| set.without(v)).collect()
    }
}

/// Replace the facets above the join face `τ` by the facets
/// `A ∪ (B∖y) ∪ (R∖z) ∪ (S∖w)` for `y ∈ B`, `z ∈ R`, `w ∈ S`.
pub fn reduce_join_face(l: &FaceLattice, tau: Shadow) -> Result<FaceLattice> {
    let jf = find_join_faces(l)?
        .into_iter()
        .find(|j| j.face == tau)
        .ok_or_else(|| {
            Error::PreconditionFailed(format!("{} is not a join face", tau.display(l.labels())))
        })?;
    let (r, s) = link_spheres(l, &jf)?;
    let mut facets: Vec<Shadow> = l
        .facets()
        .iter()
        .map(|f| f.shadow)
        .filter(|f| !tau.is_subset(*f))
        .collect();
    for y in jf.b.iter() {
        for rz in choices(r) {
            for sw in choices(s) {
                facets.push(jf.a.union(jf.b.without(y)).union(rz).union(sw));
            }
        }
    }
    let out = FaceLattice::from_facet_intersections(l.labels().to_vec(), facets)?;
    let report = out.validate();
    if !report.verdict {
        return Err(Error::PreconditionFailed(format!(
            "the reduced facet family fails {} at {:?}",
            report.violations[0].check, report.violations[0].witnesses
        )));
    }
    Ok(out)
}

/// Search bound on the number of vertices.
pub const GALE_SEARCH_MAX_VERTICES: usize = 7;

struct Target {
    n: usize,
    order: u32,
    cofacet: Vec<bool>,
}

impl Target {
    fn new(l: &FaceLattice) -> Result<Option<Target>> {
        if l.excess() != 2 {
            return Err(Error::PreconditionFailed(format!(
                "excess is {}, not 2",
                l.excess()
            )));
        }
        let n = l.n();
        if n > GALE_SEARCH_MAX_VERTICES {
            return Err(Error::InfeasibleSize(format!(
                "{n} vertices exceed the search bound of {GALE_SEARCH_MAX_VERTICES}"
            )));
        }
        let full = Shadow::full(n);
        let mut cofacet = vec![false; 1 << n];
        for f in l.facets() {
            let c = full.difference(f.shadow);
            if c.len() > 3 {
                return Ok(None);
            }
            cofacet[c.bits() as usize] = true;
        }
        Ok(Some(Target {
            n,
            order: 2 * n as u32,
            cofacet,
        }))
    }

    /// Check every set of at most three assigned vertices that contains `v`.
    fn consistent(&self, points: &[Position], v: usize) -> bool {
        let order = self.order;
        let ok = |s: Shadow, status: bool| self.cofacet[s.bits() as usize] == status;
        if !ok(Shadow::singleton(v), points[v] == Position::Center) {
            return false;
        }
        for u in 0..v {
            let pair = Shadow::from_indices([u, v]);
            if !ok(pair, pair_is_cofacet(points[u], points[v], order)) {
                return false;
            }
            for w in u + 1..v {
                let triple = pair.with(w);
                if !ok(
                    triple,
                    triple_is_cofacet(points[u], points[w], points[v], order),
                ) {
                    return false;
                }
            }
        }
        true
    }

    /// Positions allowed for vertex `v` given the earlier ones: the first
    /// ray point is pinned to ray 0, and the first point off the line
    /// through ray 0 goes to the upper half.
    fn options(&self, points: &[Position], v: usize) -> Vec<Position> {
        let m = self.order / 2;
        let rays: Vec<u32> = points[..v]
            .iter()
            .filter_map(|p| match p {
                Position::Ray(r) => Some(*r),
                Position::Center => None,
            })
            .collect();
        let mut out = vec![Position::Center];
        if rays.is_empty() {
            out.push(Position::Ray(0));
        } else if rays.iter().all(|&r| r == 0 || r == m) {
            out.extend((0..=m).map(Position::Ray));
        } else {
            out.extend((0..self.order).map(Position::Ray));
        }
        out
    }

    fn prefixes(&self, depth: usize) -> Vec<Vec<Position>> {
        let mut level = vec![Vec::new()];
        for v in 0..depth.min(self.n) {
            let mut next = Vec::new();
            for prefix in &level {
                for p in self.options(prefix, v) {
                    let mut ext = prefix.clone();
                    ext.push(p);
                    if self.consistent(&ext, v) {
                        next.push(ext);
                    }
                }
            }
            level = next;
        }
        level
    }

    fn complete(
        &self,
        points: &mut Vec<Position>,
        visit: &mut dyn FnMut(&[Position]) -> bool,
    ) -> bool {
        let v = points.len();
        if v == self.n {
            return visit(points);
        }
        for p in self.options(points, v) {
            points.push(p);
            if self.consistent(points, v) && self.complete(points, visit) {
                return true;
            }
            points.pop();
        }
        false
    }
}

fn accept(l: &FaceLattice, order: u32, points: &[Position]) -> Option<GaleDiagram> {
    let g = GaleDiagram::new(order, l.labels().to_vec(), points.to_vec()).ok()?;
    if !gale_validate(&g).verdict {
        return None;
    }
    let sphere = sphere_from_diagram(&g).ok()?;
    sphere.is_isomorphic(l).then_some(g)
}

/// Search for a Gale diagram of `l` on `2n` rays. Returns the first diagram
/// in search order whose sphere is isomorphic to `l`.
pub fn gale_search(l: &FaceLattice) -> Result<Option<GaleDiagram>> {
    let Some(target) = Target::new(l)? else {
        return Ok(None);
    };
    let found = target.prefixes(2).into_par_iter().find_map_first(|prefix| {
        let mut points = prefix;
        let mut hit = None;
        target.complete(&mut points, &mut |pts| {
            hit = accept(l, target.order, pts);
            hit.is_some()
        });
        hit
    });
    Ok(found)
}

/// Every diagram the search can reach (one per symmetry-reduced assignment).
pub fn gale_search_all(l: &FaceLattice) -> Result<Vec<GaleDiagram>> {
    let Some(target) = Target::new(l)? else {
        return Ok(Vec::new());
    };
    let found: Vec<Vec<GaleDiagram>> = target
        .prefixes(2)
        .into_par_iter()
        .map(|prefix| {
            let mut points = prefix;
            let mut hits = Vec::new();
            target.complete(&mut points, &mut |pts| {
                hits.extend(accept(l, target.order, pts));
                false
            });
            hits
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// Rays strictly inside the shorter arc from `x` to `y` (`x ≠ ±y`).
fn in_shorter_open_arc(order: u32, x: u32, y: u32, r: u32) -> bool {
    let forward = (y + order - x) % order;
    let off = (r + order - x) % order;
    if forward < order / 2 {
        off > 0 && off < forward
    } else {
        let back = order - forward;
        let off_back = (x + order - r) % order;
        off_back > 0 && off_back < back
    }
}

/// The normal form for a diagram of a reduced lattice: `R` on one ray `ρ`,
/// `S` on one ray `σ ≠ ±ρ`, `A` inside the shorter open arc `(ρ, σ)` and `B`
/// inside the shorter open arc `(-ρ, -σ)`. An empty `S` may sit anywhere.
pub fn is_join_normal_form(g: &GaleDiagram, jf: &JoinFace, r: Shadow, s: Shadow) -> bool {
    let common = |set: Shadow| -> Option<Option<u32>> {
        let mut ray = None;
        for v in set.iter() {
            match g.points[v] {
                Position::Center => return None,
                Position::Ray(x) => {
                    if *ray.get_or_insert(x) != x {
                        return None;
                    }
                }
            }
        }
        Some(ray)
    };
    let (Some(Some(rho)), Some(sigma)) = (common(r), common(s)) else {
        return false;
    };
    let rays_of = |set: Shadow| -> Option<Vec<u32>> {
        set.iter()
            .map(|v| match g.points[v] {
                Position::Ray(x) => Some(x),
                Position::Center => None,
            })
            .collect()
    };
    let (Some(ar), Some(br)) = (rays_of(jf.a), rays_of(jf.b)) else {
        return false;
    };
    let fits = |sig: u32| {
        sig != rho
            && sig != g.antipode(rho)
            && ar
                .iter()
                .all(|&x| in_shorter_open_arc(g.order, rho, sig, x))
            && br
                .iter()
                .all(|&x| in_shorter_open_arc(g.order, g.antipode(rho), g.antipode(sig), x))
    };
    match sigma {
        Some(sig) => fits(sig),
        None => (0..g.order).any(fits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cross_polytope, cycle};
    use crate::lattice::numbered_labels;

    fn diagram(order: u32, rays: &[u32]) -> GaleDiagram {
        GaleDiagram::new(
            order,
            numbered_labels("v", rays.len()),
            rays.iter().map(|&r| Position::Ray(r)).collect(),
        )
        .unwrap()
    }

    fn pentagon() -> GaleDiagram {
        diagram(20, &[0, 4, 8, 12, 16])
    }

    fn octahedron() -> GaleDiagram {
        diagram(6, &[0, 0, 2, 2, 4, 4])
    }

    #[test]
    fn validity() {
        assert!(gale_validate(&pentagon()).verdict);
        assert!(gale_validate(&octahedron()).verdict);
        let bad = diagram(8, &[0, 4, 0, 4]);
        let report = gale_validate(&bad);
        assert!(!report.verdict);
        assert_eq!(report.violations[0].check, Check::Hemisphere);
    }

    #[test]
    fn cofacet_lists() {
        let c = cofacets(&octahedron());
        assert_eq!(c.len(), 8);
        assert!(c.iter().all(|s| s.len() == 3));
        let p = cofacets(&pentagon());
        assert_eq!(p.len(), 5);
        for s in &p {
            let mut r: Vec<u32> = s.iter().map(|v| [0, 4, 8, 12, 16][v]).collect();
            r.sort_unstable();
            let mut gaps = vec![r[1] - r[0], r[2] - r[1], 20 - r[2] + r[0]];
            gaps.sort_unstable();
            assert_eq!(gaps, vec![4, 8, 8]);
        }
        let pair = diagram(4, &[1, 3, 0, 2]);
        assert!(cofacets(&pair).contains(&Shadow::from_indices([0, 1])));
    }

    #[test]
    fn spheres_from_diagrams() {
        assert!(sphere_from_diagram(&pentagon())
            .unwrap()
            .is_isomorphic(&cycle(5).unwrap()));
        assert!(sphere_from_diagram(&octahedron())
            .unwrap()
            .is_isomorphic(&cross_polytope(3).unwrap()));
    }

    #[test]
    fn shifts() {
        let p = pentagon();
        assert_eq!(shift_point(&p, 0, 0).unwrap(), p);
        match shift_point(&p, 0, 4) {
            Err(Error::BlockedShift { blocking }) => assert_eq!(blocking, vec![12]),
            other => panic!("expected a blocked shift, got {other:?}"),
        }
        let g = GaleDiagram::new(
            8,
            numbered_labels("v", 3),
            vec![Position::Ray(0), Position::Center, Position::Ray(3)],
        )
        .unwrap();
        assert!(matches!(
            shift_point(&g, 1, 2),
            Err(Error::InvalidDiagram(_))
        ));
        assert!(matches!(
            shift_point(&g, 0, 4),
            Err(Error::BlockedShift { .. })
        ));
    }

    #[test]
    fn search_finds_the_pentagon() {
        let c = cycle(5).unwrap();
        let g = gale_search(&c).unwrap().expect("pentagon is polytopal");
        assert!(sphere_from_diagram(&g).unwrap().is_isomorphic(&c));
        assert!(matches!(
            gale_search(&cycle(4).unwrap()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn join_faces_need_excess_two() {
        assert!(matches!(
            find_join_faces(&cycle(4).unwrap()),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(find_join_faces(&cross_polytope(3).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn arcs() {
        assert!(in_shorter_open_arc(12, 1, 4, 2));
        assert!(!in_shorter_open_arc(12, 1, 4, 4));
        assert!(in_shorter_open_arc(12, 4, 1, 2));
        assert!(in_shorter_open_arc(12, 11, 2, 0));
        assert!(!in_shorter_open_arc(12, 11, 2, 5));
    }
}
