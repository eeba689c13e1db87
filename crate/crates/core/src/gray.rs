//! Gray maps `Phi(a_0, .., a_{n-1}) = (a_0 M_0, .., a_{n-1} M_{n-1})` from
//! `R^n` to `F_q^{nl}` given by invertible `l x l` matrices.

use crate::codes::{LinearCode, RCode};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;
use crate::ring::RingElement;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Mats {
    Broadcast(Matrix),
    PerPosition(Vec<Matrix>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayMap {
    field: Field,
    l: usize,
    mats: Mats,
    inverses: Mats,
}

impl GrayMap {
    /// One matrix used at every position.
    pub fn broadcast(field: Field, m: Matrix) -> Result<Self> {
        let inv = invert(&field, &m, 0)?;
        Ok(GrayMap {
            l: m.rows(),
            field,
            mats: Mats::Broadcast(m),
            inverses: Mats::Broadcast(inv),
        })
    }

    pub fn per_position(field: Field, mats: Vec<Matrix>) -> Result<Self> {
        let first = mats
            .first()
            .ok_or_else(|| Error::InvalidSpec("no Gray map matrices".into()))?;
        let l = first.rows();
        let inverses = mats
            .iter()
            .enumerate()
            .map(|(j, m)| {
                if m.rows() != l {
                    return Err(Error::Dimension(format!(
                        "matrix {j} is {}x{}, expected {l}x{l}",
                        m.rows(),
                        m.cols()
                    )));
                }
                invert(&field, m, j)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GrayMap {
            field,
            l,
            mats: Mats::PerPosition(mats),
            inverses: Mats::PerPosition(inverses),
        })
    }

    /// Identity matrices: plain interleaving of the components.
    pub fn identity(field: Field, l: usize) -> Self {
        GrayMap {
            field,
            l,
            mats: Mats::Broadcast(Matrix::identity(l)),
            inverses: Mats::Broadcast(Matrix::identity(l)),
        }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Matrix `M_j`.
    pub fn matrix(&self, j: usize) -> &Matrix {
        pick(&self.mats, j)
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if let Mats::PerPosition(v) = &self.mats {
            if v.len() != n {
                return Err(Error::Dimension(format!(
                    "{} Gray map matrices for length {n}",
                    v.len()
                )));
            }
        }
        Ok(())
    }

    /// `Phi` on an interleaved vector of length `nl`.
    pub fn apply_flat(&self, v: &[Fe]) -> Result<Vec<Fe>> {
        if !v.len().is_multiple_of(self.l) {
            return Err(Error::Dimension(format!(
                "length {} is not a multiple of {}",
                v.len(),
                self.l
            )));
        }
        self.check_len(v.len() / self.l)?;
        let mut out = Vec::with_capacity(v.len());
        for (j, block) in v.chunks(self.l).enumerate() {
            out.extend(self.matrix(j).vec_mul(&self.field, block)?);
        }
        Ok(out)
    }

    pub fn phi(&self, v: &[RingElement]) -> Result<Vec<Fe>> {
        let flat: Vec<Fe> = v.iter().flat_map(|r| r.comps.iter().copied()).collect();
        if flat.len() != v.len() * self.l {
            return Err(Error::Dimension("ring elements of the wrong length".into()));
        }
        self.apply_flat(&flat)
    }

    pub fn phi_inverse(&self, v: &[Fe]) -> Result<Vec<RingElement>> {
        if !v.len().is_multiple_of(self.l) {
            return Err(Error::Dimension(format!(
                "length {} is not a multiple of {}",
                v.len(),
                self.l
            )));
        }
        self.check_len(v.len() / self.l)?;
        v.chunks(self.l)
            .enumerate()
            .map(|(j, block)| {
                Ok(RingElement::new(
                    pick(&self.inverses, j).vec_mul(&self.field, block)?,
                ))
            })
            .collect()
    }

    /// `w_G(v) = sum_j w_H(a_j M_j)`.
    pub fn gray_weight(&self, v: &[RingElement]) -> Result<usize> {
        Ok(self.phi(v)?.iter().filter(|c| !c.is_zero()).count())
    }

    /// Image of a code given in interleaved coordinates.
    pub fn image_of(&self, code: &LinearCode) -> Result<LinearCode> {
        let rows = code
            .generator()
            .row_iter()
            .map(|r| self.apply_flat(r))
            .collect::<Result<Vec<_>>>()?;
        let gen = Matrix::from_rows(code.n(), &rows)?;
        Ok(LinearCode::new(self.field.clone(), &gen))
    }

    /// `Phi(C)`, an `[nl, sum k_i]` code over `F_q`.
    pub fn image(&self, code: &RCode) -> Result<LinearCode> {
        if code.l() != self.l {
            return Err(Error::Dimension(format!(
                "Gray map for l = {} applied to l = {}",
                self.l,
                code.l()
            )));
        }
        self.image_of(&code.interleaved())
    }

    /// `Some(lambda)` when `M_j M_j^T = lambda I` for every position with a
    /// single nonzero `lambda`.
    pub fn orthogonality_scalar(&self) -> Option<Fe> {
        let mats: Vec<&Matrix> = match &self.mats {
            Mats::Broadcast(m) => vec![m],
            Mats::PerPosition(v) => v.iter().collect(),
        };
        let mut lambda = None;
        for m in mats {
            let prod = m.mul(&self.field, &m.transpose()).ok()?;
            let c = prod.get(0, 0);
            if c.is_zero() {
                return None;
            }
            for i in 0..self.l {
                for j in 0..self.l {
                    let want = if i == j { c } else { Fe::ZERO };
                    if prod.get(i, j) != want {
                        return None;
                    }
                }
            }
            match lambda {
                None => lambda = Some(c),
                Some(prev) if prev != c => return None,
                _ => {}
            }
        }
        lambda
    }
}

fn pick(m: &Mats, j: usize) -> &Matrix {
    match m {
        Mats::Broadcast(m) => m,
        Mats::PerPosition(v) => &v[j],
    }
}

fn invert(field: &Field, m: &Matrix, j: usize) -> Result<Matrix> {
    if m.rows() != m.cols() {
        return Err(Error::Dimension(format!(
            "Gray map matrix {j} is not square"
        )));
    }
    m.inverse(field)
        .map_err(|_| Error::InvalidSpec(format!("Gray map matrix {j} is not invertible")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(f: &Field, rows: &[&[&str]]) -> Matrix {
        let rows: Vec<Vec<Fe>> = rows
            .iter()
            .map(|r| r.iter().map(|s| f.parse(s).unwrap()).collect())
            .collect();
        Matrix::from_rows(rows[0].len(), &rows).unwrap()
    }

    #[test]
    fn identity_flattens() {
        let f = Field::with_default_modulus(2, 2).unwrap();
        let g = GrayMap::identity(f.clone(), 2);
        let w = f.gen();
        let v = vec![
            RingElement::new(vec![w, Fe::ZERO]),
            RingElement::new(vec![Fe::ONE, w]),
        ];
        assert_eq!(g.phi(&v).unwrap(), vec![w, Fe::ZERO, Fe::ONE, w]);
        assert_eq!(g.gray_weight(&v).unwrap(), 3);
    }

    #[test]
    fn single_position_product() {
        let f = Field::with_default_modulus(3, 2).unwrap();
        let m = mat(&f, &[&["2w", "w"], &["w", "w"]]);
        let g = GrayMap::broadcast(f.clone(), m.clone()).unwrap();
        let w = f.gen();
        let v = vec![RingElement::new(vec![w, w])];
        let expect = m.vec_mul(&f, &[w, w]).unwrap();
        assert_eq!(g.phi(&v).unwrap(), expect);
        // (w, w) M = (2w^2 + w^2, w^2 + w^2) = (0, 2w^2)
        assert_eq!(expect, vec![Fe::ZERO, f.mul(f.from_int(2), f.mul(w, w))]);
        assert_eq!(g.phi_inverse(&expect).unwrap(), v);
    }

    #[test]
    fn orthogonality_examples() {
        let f9 = Field::with_default_modulus(3, 2).unwrap();
        let g = GrayMap::broadcast(f9.clone(), mat(&f9, &[&["2w", "w"], &["w", "w"]])).unwrap();
        let w = f9.gen();
        assert_eq!(
            g.orthogonality_scalar(),
            Some(f9.mul(f9.from_int(2), f9.mul(w, w)))
        );

        let f8 = Field::with_default_modulus(2, 3).unwrap();
        let g = GrayMap::broadcast(
            f8.clone(),
            mat(&f8, &[&["w^2+w+1", "1"], &["1", "w^2+w+1"]]),
        )
        .unwrap();
        assert!(g.orthogonality_scalar().is_some());

        let f4 = Field::with_default_modulus(2, 2).unwrap();
        let g = GrayMap::broadcast(f4.clone(), mat(&f4, &[&["1", "0"], &["1", "1"]])).unwrap();
        assert_eq!(g.orthogonality_scalar(), None);
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let f = Field::with_default_modulus(2, 2).unwrap();
        let err = GrayMap::broadcast(f.clone(), mat(&f, &[&["1", "1"], &["1", "1"]])).unwrap_err();
        assert!(matches!(err, Error::InvalidSpec(_)));
    }

    #[test]
    fn per_position_length_is_checked() {
        let f = Field::with_default_modulus(2, 2).unwrap();
        let g = GrayMap::per_position(f, vec![Matrix::identity(2), Matrix::identity(2)]).unwrap();
        let v = vec![RingElement::new(vec![Fe::ONE, Fe::ONE]); 3];
        assert!(g.phi(&v).is_err());
    }
}
