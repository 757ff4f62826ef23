"""Helper dir for nonassoclab."""
