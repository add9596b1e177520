# One handler per edfn subcommand
