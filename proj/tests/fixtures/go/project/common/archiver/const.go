package archiver

const (
	ArchivalDisabled = iota
	EnableArchival
	ArchivalPaused
)

const (
	defaultTimeout = 10
)
