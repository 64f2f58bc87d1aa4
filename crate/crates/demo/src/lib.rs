//! WebAssembly bindings for the static demo page in `www/`.

use isla_core::islands::MigrationPolicy;
use wasm_bindgen::prelude::*;

pub mod model;

fn js_err(e: isla_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct DotDemo {
    model: model::DotModel,
}

#[wasm_bindgen]
impl DotDemo {
    #[wasm_bindgen(constructor)]
    pub fn new(
        seed: u64,
        num_rects: usize,
        pop_size: usize,
        selection_rate: f64,
        mutation_rate: f64,
        crossover_rate: f64,
    ) -> Result<DotDemo, JsError> {
        model::DotModel::new(
            seed,
            num_rects,
            pop_size,
            selection_rate,
            mutation_rate,
            crossover_rate,
        )
        .map(|model| DotDemo { model })
        .map_err(js_err)
    }

    /// Runs one generation and returns the new best fitness.
    pub fn step(&mut self) -> Result<f64, JsError> {
        self.model.step().map_err(js_err)
    }

    pub fn generation(&self) -> usize {
        self.model.generation()
    }

    #[wasm_bindgen(js_name = bestFitness)]
    pub fn best_fitness(&self) -> f64 {
        self.model.best_fitness()
    }

    #[wasm_bindgen(js_name = gridBest)]
    pub fn grid_best(&self) -> usize {
        self.model.grid_best()
    }

    #[wasm_bindgen(js_name = arenaSide)]
    pub fn arena_side(&self) -> f64 {
        self.model.arena_side()
    }

    pub fn rectangles(&self) -> Vec<f64> {
        self.model.rectangles()
    }

    pub fn dots(&self) -> Vec<f64> {
        self.model.dots()
    }

    #[wasm_bindgen(js_name = bestHistory)]
    pub fn best_history(&self) -> Vec<f64> {
        self.model.best_history()
    }
}

#[wasm_bindgen(js_name = operatorMix)]
pub fn operator_mix(rates: Vec<f64>, draws: u32, seed: u64) -> Result<Vec<f64>, JsError> {
    model::operator_mix(&rates, draws, seed).map_err(js_err)
}

#[wasm_bindgen]
pub struct IslandRun {
    inner: model::IslandsModel,
}

#[wasm_bindgen]
impl IslandRun {
    #[wasm_bindgen(constructor)]
    pub fn new(
        islands: usize,
        generations: usize,
        policy: &str,
        seed: u64,
    ) -> Result<IslandRun, JsError> {
        let policy: MigrationPolicy = policy.parse().map_err(js_err)?;
        model::run_islands(islands, generations, policy, seed)
            .map(|inner| IslandRun { inner })
            .map_err(js_err)
    }

    pub fn islands(&self) -> usize {
        self.inner.islands
    }

    pub fn generations(&self) -> usize {
        self.inner.generations
    }

    /// Best-fitness history of island `i` (generation 0 first).
    pub fn history(&self, i: usize) -> Vec<f64> {
        self.inner.histories.get(i).cloned().unwrap_or_default()
    }

    #[wasm_bindgen(js_name = messagesSent)]
    pub fn messages_sent(&self) -> usize {
        self.inner.messages_sent
    }

    #[wasm_bindgen(js_name = messagesDelivered)]
    pub fn messages_delivered(&self) -> usize {
        self.inner.messages_delivered
    }
}
