use kcore::{Composition, Core, Error, KTableau, Partition};

/// A partition given as `4,2,1`, `-`, a JSON array, or a JSON object with a
/// `shape` field (the output of the core commands).
pub fn partition(s: &str) -> Result<Partition, Error> {
    let t = s.trim();
    if t.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(t).map_err(|_| Error::Parse(s.to_string()))?;
        let shape = v.get("shape").ok_or_else(|| Error::Parse(s.to_string()))?;
        return serde_json::from_value(shape.clone()).map_err(|_| Error::Parse(s.to_string()));
    }
    if t.starts_with('[') {
        return serde_json::from_str(t).map_err(|_| Error::Parse(s.to_string()));
    }
    t.parse()
}

pub fn composition(s: &str) -> Result<Composition, Error> {
    let t = s.trim();
    if t.starts_with('[') {
        let v: Vec<usize> = serde_json::from_str(t).map_err(|_| Error::Parse(s.to_string()))?;
        return Composition::new(v);
    }
    t.parse()
}

/// Residues separated by commas or spaces, or a JSON array.
pub fn word(s: &str) -> Result<Vec<usize>, Error> {
    let t = s.trim();
    if t.starts_with('[') {
        return serde_json::from_str(t).map_err(|_| Error::Parse(s.to_string()));
    }
    t.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| Error::Parse(s.to_string())))
        .collect()
}

/// A tableau given as bottom-up rows `1,2,2/2,3/4` (with `-k`), or as the
/// JSON object printed by the tableau commands.
pub fn tableau(s: &str, k: Option<usize>) -> Result<KTableau, Error> {
    let t = s.trim();
    if t.starts_with('{') {
        return serde_json::from_str(t).map_err(|e| match e.classify() {
            serde_json::error::Category::Data => Error::InvalidTableau(e.to_string()),
            _ => Error::Parse(s.to_string()),
        });
    }
    let k = k.ok_or(Error::InvalidK)?;
    let rows = t
        .split('/')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    KTableau::from_rows(rows, k)
}

/// A core given in any partition syntax, checked against `k`.
pub fn core(s: &str, k: usize) -> Result<Core, Error> {
    Core::new(partition(s)?, k)
}
