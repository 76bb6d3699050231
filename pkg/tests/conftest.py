from hypothesis import settings

# exact big-integer work has no meaningful per-example deadline
settings.register_profile("qrious", deadline=None, max_examples=60)
settings.load_profile("qrious")
