//! Datasets, co-occurrence counts, and the Gaifman graph variants.
//!
//! A dataset is a list of transactions over an item universe. Relational
//! tables become transactional by turning every cell into a
//! "column=value" item. Co-occurrence counts `c[x, y]` then drive four
//! structures: standard (edge iff the pair ever co-occurs), thresholded
//! (edge iff the count reaches `t`), linear (class `ceil(c / n)` for an
//! interval size `n`) and exponential (class `ceil(log2(c + 1))`). Class
//! 0 always means disconnected.

use crate::error::{Error, Result};
use crate::model::{EdgeClass, ItemId, TwoStructure};
use std::collections::HashMap;

/// Transactions over a fixed universe; items within a transaction are
/// sorted and unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    labels: Vec<String>,
    transactions: Vec<Vec<ItemId>>,
}

/// Symmetric co-occurrence multiplicities over a universe.
#[derive(Debug, Clone)]
pub struct CooccurrenceCounts {
    labels: Vec<String>,
    counts: HashMap<(u32, u32), u64>,
}

/// Item filtering policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItemFilter {
    /// Keep items occurring in at least this many transactions.
    MinCount(u64),
    /// Keep the most frequent items; ties at the cutoff are all kept.
    TopN(usize),
}

impl Dataset {
    pub fn new(labels: Vec<String>, transactions: Vec<Vec<ItemId>>) -> Result<Self> {
        let n = labels.len();
        let mut cleaned = Vec::with_capacity(transactions.len());
        for mut t in transactions {
            if t.iter().any(|i| i.index() >= n) {
                return Err(Error::input("transaction references an item outside the universe"));
            }
            t.sort_unstable();
            t.dedup();
            cleaned.push(t);
        }
        Ok(Dataset { labels, transactions: cleaned })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: ItemId) -> &str {
        &self.labels[id.index()]
    }

    pub fn item_by_label(&self, label: &str) -> Option<ItemId> {
        self.labels.iter().position(|l| l == label).map(|i| ItemId(i as u32))
    }

    pub fn universe_len(&self) -> usize {
        self.labels.len()
    }

    pub fn transactions(&self) -> &[Vec<ItemId>] {
        &self.transactions
    }

    /// Number of transactions each item occurs in.
    pub fn item_occurrences(&self) -> Vec<u64> {
        let mut occ = vec![0u64; self.labels.len()];
        for t in &self.transactions {
            for i in t {
                occ[i.index()] += 1;
            }
        }
        occ
    }

    /// Restricts the universe to qualifying items, projects every
    /// transaction onto it and drops transactions that become empty.
    /// Returns the filtered dataset and whether a top-n cutoff had to be
    /// clamped to the universe size.
    pub fn filter_items(&self, filter: ItemFilter) -> Result<(Dataset, bool)> {
        let occ = self.item_occurrences();
        let mut clamped = false;
        let keep: Vec<bool> = match filter {
            ItemFilter::MinCount(m) => {
                if m < 1 {
                    return Err(Error::input("minimum count must be at least 1"));
                }
                occ.iter().map(|&c| c >= m).collect()
            }
            ItemFilter::TopN(k) => {
                if k < 1 {
                    return Err(Error::input("top-n must be at least 1"));
                }
                let k = if k > self.labels.len() {
                    clamped = true;
                    self.labels.len()
                } else {
                    k
                };
                let mut sorted: Vec<u64> = occ.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                let cutoff = sorted[k - 1];
                // everything tied with the k-th largest count stays
                occ.iter().map(|&c| c >= cutoff && c > 0).collect()
            }
        };
        let mut remap: Vec<Option<ItemId>> = vec![None; self.labels.len()];
        let mut labels = Vec::new();
        for (i, &k) in keep.iter().enumerate() {
            if k {
                remap[i] = Some(ItemId(labels.len() as u32));
                labels.push(self.labels[i].clone());
            }
        }
        let transactions: Vec<Vec<ItemId>> = self
            .transactions
            .iter()
            .map(|t| t.iter().filter_map(|i| remap[i.index()]).collect::<Vec<ItemId>>())
            .filter(|t: &Vec<ItemId>| !t.is_empty())
            .collect();
        Ok((Dataset { labels, transactions }, clamped))
    }
}

/// Turns a rectangular table with a header into a dataset: each row is
/// one transaction of "column=value" items. Empty cells are dropped
/// unless `keep_empty_cells` makes them a distinct "column=" value.
pub fn ingest_relational(text: &str, keep_empty_cells: bool) -> Result<Dataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| Error::input(format!("bad header: {e}")))?
        .iter()
        .map(|h| h.to_string())
        .collect();
    if headers.is_empty() {
        return Err(Error::input("empty table"));
    }
    {
        let mut seen = std::collections::BTreeSet::new();
        for h in &headers {
            if !seen.insert(h.as_str()) {
                return Err(Error::input(format!("duplicate column name {h:?}")));
            }
        }
    }
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, ItemId> = HashMap::new();
    let intern = |labels: &mut Vec<String>, index: &mut HashMap<String, ItemId>, l: String| {
        *index.entry(l.clone()).or_insert_with(|| {
            let id = ItemId(labels.len() as u32);
            labels.push(l);
            id
        })
    };
    let mut transactions = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::input(format!("ragged or malformed row: {e}")))?;
        if record.len() != headers.len() {
            return Err(Error::input("ragged row"));
        }
        let mut t = Vec::with_capacity(headers.len());
        for (col, cell) in headers.iter().zip(record.iter()) {
            if cell.is_empty() && !keep_empty_cells {
                continue;
            }
            t.push(intern(&mut labels, &mut index, format!("{col}={cell}")));
        }
        transactions.push(t);
    }
    if transactions.is_empty() {
        return Err(Error::input("empty table"));
    }
    Dataset::new(labels, transactions)
}

/// Each nonempty line is a transaction of whitespace- or comma-separated
/// tokens; duplicates within a line collapse.
pub fn ingest_transactional(text: &str) -> Result<Dataset> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, ItemId> = HashMap::new();
    let mut transactions = Vec::new();
    for line in text.lines() {
        let tokens: Vec<&str> =
            line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
        if tokens.is_empty() {
            continue;
        }
        let mut t = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let id = *index.entry(tok.to_string()).or_insert_with(|| {
                let id = ItemId(labels.len() as u32);
                labels.push(tok.to_string());
                id
            });
            t.push(id);
        }
        transactions.push(t);
    }
    Dataset::new(labels, transactions)
}

/// `c[x, y]` = number of transactions containing both x and y.
pub fn count_cooccurrences(d: &Dataset) -> CooccurrenceCounts {
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    for t in d.transactions() {
        for (i, &x) in t.iter().enumerate() {
            for &y in &t[i + 1..] {
                *counts.entry((x.0, y.0)).or_insert(0) += 1;
            }
        }
    }
    CooccurrenceCounts { labels: d.labels().to_vec(), counts }
}

impl CooccurrenceCounts {
    pub fn from_pairs(labels: Vec<String>, pairs: &[(u32, u32, u64)]) -> Result<Self> {
        let n = labels.len();
        let mut counts = HashMap::new();
        for &(x, y, c) in pairs {
            if x == y || x as usize >= n || y as usize >= n {
                return Err(Error::input("bad count pair"));
            }
            let key = if x < y { (x, y) } else { (y, x) };
            counts.insert(key, c);
        }
        Ok(CooccurrenceCounts { labels, counts })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn universe_len(&self) -> usize {
        self.labels.len()
    }

    pub fn count(&self, x: ItemId, y: ItemId) -> u64 {
        assert!(x != y, "co-occurrence with itself is undefined");
        let key = if x.0 < y.0 { (x.0, y.0) } else { (y.0, x.0) };
        self.counts.get(&key).copied().unwrap_or(0)
    }

    /// Counts strictly below `t` are forced to zero; combine with the
    /// linear or exponential builders for thresholded variants.
    pub fn apply_lower_threshold(&self, t: u64) -> Result<CooccurrenceCounts> {
        if t < 1 {
            return Err(Error::input("threshold must be at least 1"));
        }
        let counts = self
            .counts
            .iter()
            .filter(|&(_, &c)| c >= t)
            .map(|(&k, &c)| (k, c))
            .collect();
        Ok(CooccurrenceCounts { labels: self.labels.clone(), counts })
    }

    fn build(&self, mut class_of: impl FnMut(u64) -> u32) -> TwoStructure {
        TwoStructure::from_class_fn(self.labels.clone(), |a, b| {
            EdgeClass(class_of(self.count(a, b)))
        })
        .expect("count labels are unique")
    }
}

/// Edge iff the pair co-occurs at least once.
pub fn build_standard(c: &CooccurrenceCounts) -> TwoStructure {
    c.build(|n| u32::from(n >= 1))
}

/// Edge iff the pair co-occurs at least `t` times.
pub fn build_thresholded(c: &CooccurrenceCounts, t: u64) -> Result<TwoStructure> {
    if t < 1 {
        return Err(Error::input("threshold must be at least 1"));
    }
    Ok(c.build(|n| u32::from(n >= t)))
}

/// Class `ceil(count / interval)`; zero counts stay disconnected.
pub fn build_linear(c: &CooccurrenceCounts, interval: u64) -> Result<TwoStructure> {
    if interval < 1 {
        return Err(Error::input("interval size must be at least 1"));
    }
    Ok(c.build(|n| n.div_ceil(interval) as u32))
}

/// Class `ceil(log2(count + 1))`, computed as the bit length of the
/// count so bucket boundaries are exact; zero counts stay disconnected.
pub fn build_exponential(c: &CooccurrenceCounts) -> TwoStructure {
    c.build(|n| u64::BITS - n.leading_zeros())
}
