//! Face-list text format: one face per line, vertex labels separated by
//! whitespace. Blank lines and `#` comments are ignored. Reading takes the
//! downward closure; writing emits the facets.

use super::SimplicialComplex;
use crate::error::{Error, Result};

impl SimplicialComplex {
    pub fn parse_face_list(text: &str) -> Result<SimplicialComplex> {
        let mut faces = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let face = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("expected a vertex label, found {tok:?}"),
                    })
                })
                .collect::<Result<Vec<u32>>>()?;
            faces.push(face);
        }
        Ok(SimplicialComplex::from_faces(faces))
    }

    /// Facets, one per line, in (dimension, lexicographic) order.
    pub fn to_face_list(&self) -> String {
        let mut out = String::new();
        for facet in self.facets() {
            let labels: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }

    /// Every face, one per line, by dimension.
    pub fn to_full_face_list(&self) -> String {
        let mut out = String::new();
        for d in 0..=self.dim() {
            for face in self.faces(d) {
                let labels: Vec<String> = face.iter().map(|v| v.to_string()).collect();
                out.push_str(&labels.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# hexagon\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";
        let k = SimplicialComplex::parse_face_list(text).unwrap();
        assert_eq!(k.f_vector().counts, vec![6, 6]);
        assert_eq!(SimplicialComplex::parse_face_list(&k.to_face_list()).unwrap(), k);
        assert!(matches!(SimplicialComplex::parse_face_list("1 2\n1 x\n"), Err(Error::Parse { line: 2, .. })));
    }
}
