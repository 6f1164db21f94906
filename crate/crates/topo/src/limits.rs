/// Resource caps shared by the library and the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest dimension a full complex may be materialized to.
    pub max_dim: usize,
    /// Largest qubit count for dense state-space oracles.
    pub dense_cap: usize,
    /// Largest matrix side for the dense eigenvalue diagnostic.
    pub eigen_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_dim: 25, dense_cap: 14, eigen_cap: 1500 }
    }
}

impl Limits {
    /// Defaults overridden by `CLIQUEHOM_MAX_DIM`, `CLIQUEHOM_DENSE_CAP`
    /// and `CLIQUEHOM_EIGEN_CAP` when set.
    pub fn from_env() -> Limits {
        let mut l = Limits::default();
        let read = |k: &str| std::env::var(k).ok().and_then(|v| v.trim().parse::<usize>().ok());
        if let Some(v) = read("CLIQUEHOM_MAX_DIM") {
            l.max_dim = v;
        }
        if let Some(v) = read("CLIQUEHOM_DENSE_CAP") {
            l.dense_cap = v;
        }
        if let Some(v) = read("CLIQUEHOM_EIGEN_CAP") {
            l.eigen_cap = v;
        }
        l
    }
}
