import hypothesis

hypothesis.settings.register_profile("engine", deadline=None, max_examples=60)
hypothesis.settings.load_profile("engine")
