y = eval(input())
x = 0
print(7)
x = 1
print(7)
x = 2
print(7)
x = 3
print(7)
x = 4
print(7)
print(y)
