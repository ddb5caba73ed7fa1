"""Classification pipeline, structural cases, exceptional rings and the corpus."""
