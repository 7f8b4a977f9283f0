m = eval(input())
s = eval(input())
print(m and s)
print(m or s)
print(not m)
print(m != s)
print(1 if m and not s else 0)
