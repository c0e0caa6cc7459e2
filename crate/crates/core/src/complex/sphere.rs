//! Graded sphere and ball recognition.
//!
//! Dimensions up to 2 are decided exactly from combinatorics. Above that the
//! verdict is homological: the complex must have the homology of a sphere (or
//! a point) and every vertex link must itself receive a sphere or ball verdict.

use serde::Serialize;

use super::SimplicialComplex;
use crate::homology::homology_summary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "dim", rename_all = "snake_case")]
pub enum SphereVerdict {
    /// PL sphere of the given dimension, decided exactly (`d <= 2`; `-1` is `{∅}`).
    CertifiedSphere(i32),
    /// PL ball, decided exactly (`d <= 2`).
    CertifiedBall(i32),
    /// Homology sphere whose vertex links are (homology) spheres.
    HomologySphere(i32),
    /// Acyclic complex whose vertex links are spheres or balls and whose
    /// boundary is a (homology) sphere.
    HomologyBall(i32),
    /// Some check failed.
    No,
    /// The void complex, which has no faces at all.
    Other,
}

impl SphereVerdict {
    pub fn is_sphere(self) -> bool {
        matches!(self, SphereVerdict::CertifiedSphere(_) | SphereVerdict::HomologySphere(_))
    }

    pub fn is_ball(self) -> bool {
        matches!(self, SphereVerdict::CertifiedBall(_) | SphereVerdict::HomologyBall(_))
    }

    pub fn is_certified(self) -> bool {
        matches!(self, SphereVerdict::CertifiedSphere(_) | SphereVerdict::CertifiedBall(_))
    }

    /// Dimension carried by a sphere or ball verdict.
    pub fn dim(self) -> Option<i32> {
        match self {
            SphereVerdict::CertifiedSphere(d)
            | SphereVerdict::CertifiedBall(d)
            | SphereVerdict::HomologySphere(d)
            | SphereVerdict::HomologyBall(d) => Some(d),
            SphereVerdict::No | SphereVerdict::Other => None,
        }
    }
}

pub(super) fn verdict(k: &SimplicialComplex) -> SphereVerdict {
    if k.is_void() {
        return SphereVerdict::Other;
    }
    match k.dim() {
        -1 => SphereVerdict::CertifiedSphere(-1),
        0 => match k.face_count(0) {
            1 => SphereVerdict::CertifiedBall(0),
            2 => SphereVerdict::CertifiedSphere(0),
            _ => SphereVerdict::No,
        },
        1 => one_dimensional(k),
        2 => two_dimensional(k),
        d => higher(k, d as i32),
    }
}

fn one_dimensional(k: &SimplicialComplex) -> SphereVerdict {
    if !k.is_pure() || k.component_count() != 1 {
        return SphereVerdict::No;
    }
    let verts = k.vertices();
    let mut degree = vec![0usize; verts.len()];
    for e in k.faces(1) {
        for v in e {
            degree[verts.binary_search(v).expect("vertex")] += 1;
        }
    }
    if degree.iter().any(|&d| d > 2) {
        return SphereVerdict::No;
    }
    match degree.iter().filter(|&&d| d == 1).count() {
        0 => SphereVerdict::CertifiedSphere(1),
        2 => SphereVerdict::CertifiedBall(1),
        _ => SphereVerdict::No,
    }
}

fn two_dimensional(k: &SimplicialComplex) -> SphereVerdict {
    if !k.is_pure() || k.component_count() != 1 {
        return SphereVerdict::No;
    }
    for v in k.vertices() {
        let lk = k.link(&[v]).expect("vertex is a face");
        let lv = one_dimensional(&lk);
        if !(lv.is_sphere() || lv.is_ball()) {
            return SphereVerdict::No;
        }
    }
    // vertex links being circles or arcs makes every edge lie in one or two
    // triangles, so this is a connected surface, possibly with boundary
    let chi = k.f_vector().euler();
    let boundary = k.boundary();
    if boundary.is_void() {
        if chi == 2 {
            SphereVerdict::CertifiedSphere(2)
        } else {
            SphereVerdict::No
        }
    } else if chi == 1 && one_dimensional(&boundary) == SphereVerdict::CertifiedSphere(1) {
        SphereVerdict::CertifiedBall(2)
    } else {
        SphereVerdict::No
    }
}

fn higher(k: &SimplicialComplex, d: i32) -> SphereVerdict {
    if !k.is_pure() {
        return SphereVerdict::No;
    }
    let Ok(h) = homology_summary(k) else {
        return SphereVerdict::No;
    };
    let Some(groups) = h.integral.as_ref() else {
        return SphereVerdict::No;
    };
    let torsion_free = groups.iter().all(|g| g.torsion.is_empty());
    let betti: Vec<usize> = groups.iter().map(|g| g.betti).collect();
    let mut point = vec![0; d as usize + 1];
    point[0] = 1;
    let mut sphere = point.clone();
    sphere[d as usize] = 1;
    let mut saw_ball_link = false;
    for v in k.vertices() {
        let lv = verdict(&k.link(&[v]).expect("vertex is a face"));
        if lv.dim() != Some(d - 1) {
            return SphereVerdict::No;
        }
        saw_ball_link |= lv.is_ball();
    }
    if torsion_free && betti == sphere && !saw_ball_link {
        SphereVerdict::HomologySphere(d)
    } else if torsion_free && betti == point && saw_ball_link {
        let boundary = verdict(&k.boundary());
        if boundary.is_sphere() && boundary.dim() == Some(d - 1) {
            SphereVerdict::HomologyBall(d)
        } else {
            SphereVerdict::No
        }
    } else {
        SphereVerdict::No
    }
}
