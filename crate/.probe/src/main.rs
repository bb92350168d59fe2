use nalgebra::{DMatrix, DVector, Complex};

fn main() {
    let a = DMatrix::<f64>::from_row_slice(2, 2, &[0.0, 1.0, -2.0, -2.0]);
    let ev = a.complex_eigenvalues();
    println!("eig: {:?}", ev.as_slice());
    let schur = a.clone().schur();
    let (_q, t) = schur.unpack();
    println!("schur t ok {}", t.nrows());
    let e = a.exp();
    println!("exp00: {}", e[(0, 0)]);
    let svd = a.clone().svd(true, true);
    println!("sv: {:?}", svd.singular_values.as_slice());
    let s = DMatrix::<f64>::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
    let se = s.clone().symmetric_eigen();
    println!("sym eig: {:?}", se.eigenvalues.as_slice());
    println!("chol ok: {}", s.clone().cholesky().is_some());
    let ac = DMatrix::<Complex<f64>>::from_fn(2, 2, |i, j| Complex::new(a[(i, j)], 0.1));
    let b = DVector::<Complex<f64>>::from_element(2, Complex::new(1.0, 0.0));
    println!("complex solve: {:?}", ac.lu().solve(&b).map(|v| v[0]));
    let m = DMatrix::<f64>::from_row_slice(3, 2, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0]);
    let rhs = DVector::from_vec(vec![1.0, 2.0, 3.0]);
    println!("lsq: {:?}", m.clone().svd(true, true).solve(&rhs, 1e-12).unwrap().as_slice());
    let k = a.kronecker(&s);
    println!("kron dims: {}x{}", k.nrows(), k.ncols());
    // empty matrix handling
    let z = DMatrix::<f64>::zeros(0, 0);
    println!("empty eig count: {}", z.complex_eigenvalues().len());
}
