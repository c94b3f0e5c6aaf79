#include "losslens/data.hpp"

#include <cmath>

#include "losslens/error.hpp"

namespace losslens {

std::string to_string(TaskType v) {
  switch (v) {
    case TaskType::closed_book_qa: return "closed_book_qa";
    case TaskType::commonsense_nli: return "commonsense_nli";
    case TaskType::reading_comprehension: return "reading_comprehension";
    case TaskType::coreference: return "coreference";
    case TaskType::examination: return "examination";
    case TaskType::math_word_problem: return "math_word_problem";
    case TaskType::other: return "other";
  }
  return "other";
}

std::string to_string(Prompting v) {
  switch (v) {
    case Prompting::zero_shot: return "zero_shot";
    case Prompting::few_shot: return "few_shot";
    case Prompting::few_shot_cot: return "few_shot_cot";
  }
  return "zero_shot";
}

std::string to_string(AnswerForm v) {
  return v == AnswerForm::multi_choice ? "multi_choice" : "open_form";
}

std::string to_string(TaskMetric v) {
  return v == TaskMetric::accuracy ? "accuracy" : "exact_match";
}

std::string to_string(MetricKind v) {
  switch (v) {
    case MetricKind::accuracy: return "accuracy";
    case MetricKind::exact_match: return "exact_match";
    case MetricKind::correct_choice_prob: return "correct_choice_prob";
    case MetricKind::brier: return "brier";
    case MetricKind::brier_per_option: return "brier_per_option";
  }
  return "accuracy";
}

TaskType task_type_from_string(const std::string& s) {
  if (s == "closed_book_qa") return TaskType::closed_book_qa;
  if (s == "commonsense_nli") return TaskType::commonsense_nli;
  if (s == "reading_comprehension") return TaskType::reading_comprehension;
  if (s == "coreference") return TaskType::coreference;
  if (s == "examination") return TaskType::examination;
  if (s == "math_word_problem") return TaskType::math_word_problem;
  if (s == "other") return TaskType::other;
  throw Error("unknown task_type \"" + s + "\"");
}

Prompting prompting_from_string(const std::string& s) {
  if (s == "zero_shot") return Prompting::zero_shot;
  if (s == "few_shot") return Prompting::few_shot;
  if (s == "few_shot_cot") return Prompting::few_shot_cot;
  throw Error("unknown prompting \"" + s + "\"");
}

AnswerForm answer_form_from_string(const std::string& s) {
  if (s == "multi_choice") return AnswerForm::multi_choice;
  if (s == "open_form") return AnswerForm::open_form;
  throw Error("unknown answer_form \"" + s + "\"");
}

TaskMetric task_metric_from_string(const std::string& s) {
  if (s == "accuracy") return TaskMetric::accuracy;
  if (s == "exact_match") return TaskMetric::exact_match;
  throw Error("unknown metric \"" + s + "\"");
}

void DatasetDescriptor::validate() const {
  if (name.empty()) throw Error("dataset name must be nonempty");
  if (answer_form == AnswerForm::multi_choice) {
    if (!num_choices) throw Error("multi_choice dataset \"" + name + "\" requires num_choices");
    if (*num_choices < 2) throw Error("num_choices must be >= 2");
    const double expected = 1.0 / static_cast<double>(*num_choices);
    if (std::abs(random_baseline - expected) > 1e-12)
      throw Error("multi_choice random_baseline must equal 1/num_choices");
  } else {
    if (num_choices) throw Error("open_form dataset \"" + name + "\" must not set num_choices");
    if (random_baseline != 0.0) throw Error("open_form random_baseline must be 0");
  }
}

DatasetDescriptor DatasetDescriptor::make_multi_choice(std::string name, TaskType task,
                                                       Prompting prompting, TaskMetric metric,
                                                       int num_choices) {
  DatasetDescriptor d;
  d.name = std::move(name);
  d.task_type = task;
  d.prompting = prompting;
  d.answer_form = AnswerForm::multi_choice;
  d.metric = metric;
  d.num_choices = num_choices;
  d.random_baseline = num_choices > 0 ? 1.0 / static_cast<double>(num_choices) : 0.0;
  d.validate();
  return d;
}

DatasetDescriptor DatasetDescriptor::make_open_form(std::string name, TaskType task,
                                                    Prompting prompting, TaskMetric metric) {
  DatasetDescriptor d;
  d.name = std::move(name);
  d.task_type = task;
  d.prompting = prompting;
  d.answer_form = AnswerForm::open_form;
  d.metric = metric;
  d.num_choices = std::nullopt;
  d.random_baseline = 0.0;
  d.validate();
  return d;
}

void ExampleOutcome::validate() const {
  if (example_id.empty()) throw Error("example_id must be nonempty");
  if (is_multi_choice()) {
    const auto& m = mc();
    if (m.choice_probs.size() < 2) throw Error("choice_probs needs at least 2 entries");
    double sum = 0.0;
    for (double p : m.choice_probs) {
      if (!(p >= 0.0 && p <= 1.0)) throw Error("choice_probs entry outside [0,1]");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6g", sum);
      throw Error(std::string("probabilities sum ") + buf + ", not 1 within 1e-6");
    }
    if (m.correct_index < 0 || m.correct_index >= static_cast<int>(m.choice_probs.size()))
      throw Error("correct_index out of range");
  } else {
    if (of().gold_texts.empty()) throw Error("open-form record lacking gold_texts");
  }
}

MetricValue make_metric(MetricKind kind, double value, long n_examples) {
  MetricValue v;
  v.kind = kind;
  v.value = value;
  v.n_examples = n_examples;
  v.higher_is_better =
      !(kind == MetricKind::brier || kind == MetricKind::brier_per_option);
  return v;
}

}  // namespace losslens
